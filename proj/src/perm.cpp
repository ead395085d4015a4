#include "permcf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permcf {

Caps& global_caps() {
  static Caps caps;
  return caps;
}

namespace {

void check_word(const std::vector<int>& w, int base) {
  int n = static_cast<int>(w.size());
  std::vector<char> seen(n, 0);
  for (int v : w) {
    int idx = v - base;
    if (idx < 0 || idx >= n || seen[idx])
      throw std::invalid_argument("word is not a permutation");
    seen[idx] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) {
  check_word(one_line, 1);
  w_.resize(one_line.size());
  for (size_t i = 0; i < one_line.size(); ++i) w_[i] = one_line[i] - 1;
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

std::string Permutation::str() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << w_[i] + 1;
  }
  return out.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> w;
  int v;
  while (in >> v) w.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad permutation text: " + text);
  return Permutation(w);
}

SignedPermutation::SignedPermutation(std::vector<int> one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<char> seen(n, 0);
  for (int v : one_line) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a - 1])
      throw std::invalid_argument("not a signed permutation word");
    seen[a - 1] = 1;
  }
  w_ = std::move(one_line);
}

std::string SignedPermutation::str() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ' ';
    out << w_[i];
  }
  return out.str();
}

StarMap::StarMap(std::vector<int> images) {
  check_word(images, 0);
  m_ = std::move(images);
  inv_.resize(m_.size());
  for (size_t i = 0; i < m_.size(); ++i) inv_[m_[i]] = static_cast<int>(i);
}

int StarMap::cycle_count() const {
  int n1 = static_cast<int>(m_.size());
  std::vector<char> seen(n1, 0);
  int cycles = 0;
  for (int i = 0; i < n1; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = m_[j]) seen[j] = 1;
  }
  return cycles;
}

std::string StarMap::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < m_.size(); ++i) {
    if (i) out << ' ';
    out << m_[i];
  }
  return out.str();
}

std::string CycleForm::str() const {
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out << ' ';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation inverse(const Permutation& p) {
  int n = p.size();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[p(i) - 1] = i;
  return Permutation(w);
}

Conjugation conjugation_from_name(const std::string& name) {
  if (name == "r") return Conjugation::R;
  if (name == "c") return Conjugation::C;
  if (name == "rc" || name == "r.c") return Conjugation::RC;
  if (name == "rcr" || name == "r.c.r") return Conjugation::RCR;
  throw std::invalid_argument("unknown conjugation '" + name + "' (use r, c, rc, rcr)");
}

Permutation conjugate(const Permutation& p, Conjugation kind) {
  int n = p.size();
  std::vector<int> w(n);
  switch (kind) {
    case Conjugation::R:
      for (int i = 1; i <= n; ++i) w[i - 1] = p(n + 1 - i);
      break;
    case Conjugation::C:
      for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - p(i);
      break;
    case Conjugation::RC:
      return conjugate(conjugate(p, Conjugation::R), Conjugation::C);
    case Conjugation::RCR:
      return conjugate(conjugate(p, Conjugation::RC), Conjugation::R);
  }
  return Permutation(w);
}

Permutation hat(const Permutation& p) {
  int n = p.size();
  std::vector<int> w(n + 1);
  for (int i = 1; i <= n; ++i) w[i - 1] = p(i) + 1;
  w[n] = 1;
  return Permutation(w);
}

StarMap star(const Permutation& p) {
  int n = p.size();
  std::vector<int> m(n + 1);
  m[0] = n;
  for (int i = 1; i <= n; ++i) m[i] = p(i) - 1;
  return StarMap(m);
}

CycleForm stan(const Permutation& p) {
  int n = p.size();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int j = start; !seen[j]; j = p(j)) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    // rotate so the largest element leads
    auto mx = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mx, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return CycleForm{std::move(cycles)};
}

bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) return false;
  return true;
}

Permutation iota(const Permutation& p, bool allow_fixed_points) {
  if (!allow_fixed_points && !is_derangement(p))
    throw std::domain_error("iota requires a derangement");
  CycleForm cf = stan(p);
  std::vector<int> w;
  w.reserve(p.size());
  for (const auto& cyc : cf.cycles) w.insert(w.end(), cyc.begin(), cyc.end());
  return Permutation(w);
}

Permutation iota_inverse(const Permutation& word) {
  int n = word.size();
  std::vector<int> image(n + 1, 0);
  int cycle_start = 1, running_max = 0;
  for (int i = 1; i <= n; ++i) {
    if (word(i) > running_max) {  // left-to-right maximum opens a cycle
      if (i > 1) image[word(i - 1)] = word(cycle_start);
      cycle_start = i;
      running_max = word(i);
    }
    if (i > cycle_start) image[word(i - 1)] = word(i);
  }
  image[word(n)] = word(cycle_start);
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = image[i];
  return Permutation(w);
}

namespace {

// Each avoidance test scans pairs with prefix/suffix extrema; the generic
// triple loop lives in the tests as the oracle.
bool contains_123(const Permutation& p) {
  int n = p.size();
  std::vector<int> sufmax(n + 2, 0);
  for (int i = n; i >= 1; --i) sufmax[i] = std::max(sufmax[i + 1], p(i));
  int premin = n + 1;
  for (int j = 1; j <= n; ++j) {
    if (premin < p(j) && sufmax[j + 1] > p(j)) return true;
    premin = std::min(premin, p(j));
  }
  return false;
}

bool contains_321(const Permutation& p) {
  int n = p.size();
  std::vector<int> sufmin(n + 2, 0);
  sufmin[n + 1] = n + 1;
  for (int i = n; i >= 1; --i) sufmin[i] = std::min(sufmin[i + 1], p(i));
  int premax = 0;
  for (int j = 1; j <= n; ++j) {
    if (premax > p(j) && sufmin[j + 1] < p(j)) return true;
    premax = std::max(premax, p(j));
  }
  return false;
}

bool contains_132(const Permutation& p) {
  int n = p.size();
  int premin = n + 1;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k)
      if (p(j) > p(k) && premin < p(k)) return true;
    premin = std::min(premin, p(j));
  }
  return false;
}

bool contains_213(const Permutation& p) {
  int n = p.size();
  std::vector<int> sufmax(n + 2, 0);
  for (int i = n; i >= 1; --i) sufmax[i] = std::max(sufmax[i + 1], p(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i) && sufmax[j + 1] > p(i)) return true;
  return false;
}

bool contains_231(const Permutation& p) {
  int n = p.size();
  std::vector<int> sufmin(n + 2, 0);
  sufmin[n + 1] = n + 1;
  for (int i = n; i >= 1; --i) sufmin[i] = std::min(sufmin[i + 1], p(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) < p(j) && sufmin[j + 1] < p(i)) return true;
  return false;
}

bool contains_312(const Permutation& p) {
  int n = p.size();
  for (int i = 1; i <= n; ++i) {
    int runmin = n + 1;
    for (int k = i + 1; k <= n; ++k) {
      if (runmin < p(k) && p(k) < p(i)) return true;
      runmin = std::min(runmin, p(k));
    }
  }
  return false;
}

}  // namespace

bool avoids(const Permutation& p, const Permutation& tau) {
  if (tau.size() != 3) throw std::invalid_argument("patterns must have length 3");
  int code = tau(1) * 100 + tau(2) * 10 + tau(3);
  switch (code) {
    case 123: return !contains_123(p);
    case 132: return !contains_132(p);
    case 213: return !contains_213(p);
    case 231: return !contains_231(p);
    case 312: return !contains_312(p);
    case 321: return !contains_321(p);
  }
  throw std::invalid_argument("bad pattern");
}

std::string ClassSpec::str() const {
  switch (cls) {
    case PermClass::S: return "S";
    case PermClass::D: return "D";
    case PermClass::B: return "B";
    case PermClass::S_avoiding: return "S(" + std::to_string(tau(1) * 100 + tau(2) * 10 + tau(3)) + ")";
    case PermClass::D_avoiding: return "D(" + std::to_string(tau(1) * 100 + tau(2) * 10 + tau(3)) + ")";
  }
  return "?";
}

ClassSpec parse_class(const std::string& text) {
  ClassSpec spec;
  if (text == "S") {
    spec.cls = PermClass::S;
    return spec;
  }
  if (text == "D") {
    spec.cls = PermClass::D;
    return spec;
  }
  if (text == "B") {
    spec.cls = PermClass::B;
    return spec;
  }
  auto open = text.find('(');
  if ((text[0] == 'S' || text[0] == 'D') && open == 1 && text.back() == ')') {
    std::string pat = text.substr(2, text.size() - 3);
    if (pat.size() == 3) {
      std::vector<int> w = {pat[0] - '0', pat[1] - '0', pat[2] - '0'};
      spec.cls = text[0] == 'S' ? PermClass::S_avoiding : PermClass::D_avoiding;
      spec.tau = Permutation(w);
      return spec;
    }
  }
  throw std::invalid_argument("bad class '" + text + "' (use S, D, B, S(231), D(321))");
}

void for_each_in_class(const ClassSpec& cls, int n,
                       const std::function<void(const Permutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (cls.cls == PermClass::B)
    throw std::invalid_argument("B-class enumeration uses for_each_signed");
  if (n > global_caps().s_max)
    throw ResourceError("class " + cls.str() + "_" + std::to_string(n) +
                        " exceeds cap " + std::to_string(global_caps().s_max));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(w);
    switch (cls.cls) {
      case PermClass::S: break;
      case PermClass::D:
        if (!is_derangement(p)) continue;
        break;
      case PermClass::S_avoiding:
        if (!avoids(p, cls.tau)) continue;
        break;
      case PermClass::D_avoiding:
        if (!is_derangement(p) || !avoids(p, cls.tau)) continue;
        break;
      case PermClass::B: break;
    }
    fn(p);
  } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_signed(int n, const std::function<void(const SignedPermutation&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > global_caps().b_max)
    throw ResourceError("class B_" + std::to_string(n) + " exceeds cap " +
                        std::to_string(global_caps().b_max));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signed_word(w.begin(), w.end());
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) signed_word[i] = -signed_word[i];
      fn(SignedPermutation(std::move(signed_word)));
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> collect_class(const ClassSpec& cls, int n) {
  std::vector<Permutation> out;
  for_each_in_class(cls, n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace permcf
