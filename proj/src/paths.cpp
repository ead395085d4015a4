#include "permcf/paths.hpp"

#include <sstream>
#include <stdexcept>

namespace permcf {

char step_char(Step s) {
  switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    case Step::Lb: return 'B';
    case Step::Lr: return 'R';
    case Step::Ly: return 'Y';
  }
  return '?';
}

Step step_from_char(char c) {
  switch (c) {
    case 'U': return Step::U;
    case 'D': return Step::D;
    case 'B': return Step::Lb;
    case 'R': return Step::Lr;
    case 'Y': return Step::Ly;
  }
  throw std::invalid_argument(std::string("bad step character '") + c + "'");
}

MotzkinWord::MotzkinWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  h_.resize(steps_.size() + 1);
  h_[0] = 0;
  for (size_t i = 0; i < steps_.size(); ++i) {
    int d = steps_[i] == Step::U ? 1 : steps_[i] == Step::D ? -1 : 0;
    h_[i + 1] = h_[i] + d;
    if (h_[i + 1] < 0)
      throw std::invalid_argument("path dips below the axis at step " +
                                  std::to_string(i + 1));
  }
  if (h_.back() != 0) throw std::invalid_argument("path does not end on the axis");
}

bool MotzkinWord::uses_yellow() const { return count(Step::Ly) > 0; }

int MotzkinWord::count(Step s) const {
  int c = 0;
  for (Step t : steps_)
    if (t == s) ++c;
  return c;
}

std::string MotzkinWord::str() const {
  std::string out;
  for (Step s : steps_) out.push_back(step_char(s));
  return out;
}

MotzkinWord MotzkinWord::parse(const std::string& text) {
  std::vector<Step> steps;
  for (char c : text) steps.push_back(step_from_char(c));
  return MotzkinWord(std::move(steps));
}

std::string LaguerreHistory::str() const {
  std::ostringstream out;
  out << path.str() << ';';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  return out.str();
}

LaguerreHistory LaguerreHistory::parse(const std::string& text, LHVariant variant) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("history text needs 'steps;p1,p2,...'");
  LaguerreHistory h;
  h.variant = variant;
  h.path = MotzkinWord::parse(text.substr(0, semi));
  std::string rest = text.substr(semi + 1);
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) h.p.push_back(std::stoi(item));
  }
  return h;
}

LHValidation validate(const LaguerreHistory& h) {
  int n = h.path.length();
  auto fail = [](int i, const std::string& what) {
    return LHValidation{false, i, what};
  };
  if (static_cast<int>(h.p.size()) != n)
    return fail(0, "weight vector length differs from path length");
  if (h.variant != LHVariant::VariantRestricted && h.path.uses_yellow())
    return fail(0, "yellow level steps only occur in the variant-restricted form");
  for (int i = 1; i <= n; ++i) {
    int hi = h.path.height(i - 1);
    int pi = h.p[i - 1];
    Step s = h.path.step(i);
    if (pi < 0) return fail(i, "p_" + std::to_string(i) + " negative");
    switch (h.variant) {
      case LHVariant::Full:
        if (pi > hi)
          return fail(i, "p_" + std::to_string(i) + "=" + std::to_string(pi) +
                             " exceeds h_" + std::to_string(i - 1) + "=" +
                             std::to_string(hi));
        break;
      case LHVariant::Restricted: {
        int bound = (s == Step::Lr || s == Step::D) ? hi - 1 : hi;
        if (pi > bound)
          return fail(i, "p_" + std::to_string(i) + "=" + std::to_string(pi) +
                             " exceeds bound " + std::to_string(bound));
        break;
      }
      case LHVariant::VariantRestricted: {
        if (s == Step::Ly) {
          if (pi != hi)
            return fail(i, "p_" + std::to_string(i) + " must equal h_" +
                               std::to_string(i - 1) + " on a yellow step");
        } else {
          int bound = (s == Step::U) ? hi : hi - 1;
          if (pi > bound)
            return fail(i, "p_" + std::to_string(i) + "=" + std::to_string(pi) +
                               " exceeds bound " + std::to_string(bound));
        }
        break;
      }
    }
  }
  return LHValidation{};
}

namespace {

void check_path_cap(int n) {
  if (n > global_caps().s_max)
    throw ResourceError("path enumeration at n=" + std::to_string(n) +
                        " exceeds cap " + std::to_string(global_caps().s_max));
}

void gen_paths(PathKind kind, int n, std::vector<Step>& cur, int height,
               std::vector<MotzkinWord>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (height == 0) out.push_back(MotzkinWord(cur));
    return;
  }
  int remaining = n - static_cast<int>(cur.size());
  // U, D, Lb, Lr in this fixed order
  if (height + 1 <= remaining - 1) {
    cur.push_back(Step::U);
    gen_paths(kind, n, cur, height + 1, out);
    cur.pop_back();
  }
  if (height > 0) {
    cur.push_back(Step::D);
    gen_paths(kind, n, cur, height - 1, out);
    cur.pop_back();
  }
  if (height <= remaining - 1) {
    cur.push_back(Step::Lb);
    gen_paths(kind, n, cur, height, out);
    cur.pop_back();
    if (!(kind == PathKind::TwoMotzkinStar && height == 0)) {
      cur.push_back(Step::Lr);
      gen_paths(kind, n, cur, height, out);
      cur.pop_back();
    }
  }
}

void gen_histories(LHVariant variant, int n, std::vector<Step>& cur,
                   std::vector<int>& weights, int height,
                   std::vector<LaguerreHistory>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (height == 0) {
      LaguerreHistory h;
      h.variant = variant;
      h.path = MotzkinWord(cur);
      h.p = weights;
      out.push_back(std::move(h));
    }
    return;
  }
  int remaining = n - static_cast<int>(cur.size());
  auto push = [&](Step s, int new_height, int lo, int hi) {
    if (new_height < 0 || new_height > remaining - 1) return;
    for (int w = lo; w <= hi; ++w) {
      cur.push_back(s);
      weights.push_back(w);
      gen_histories(variant, n, cur, weights, new_height, out);
      weights.pop_back();
      cur.pop_back();
    }
  };
  switch (variant) {
    case LHVariant::Full:
      push(Step::U, height + 1, 0, height);
      push(Step::D, height - 1, 0, height);
      push(Step::Lb, height, 0, height);
      push(Step::Lr, height, 0, height);
      break;
    case LHVariant::Restricted:
      push(Step::U, height + 1, 0, height);
      push(Step::D, height - 1, 0, height - 1);
      push(Step::Lb, height, 0, height);
      push(Step::Lr, height, 0, height - 1);
      break;
    case LHVariant::VariantRestricted:
      push(Step::U, height + 1, 0, height);
      push(Step::D, height - 1, 0, height - 1);
      push(Step::Lb, height, 0, height - 1);
      push(Step::Lr, height, 0, height - 1);
      push(Step::Ly, height, height, height);
      break;
  }
}

}  // namespace

std::vector<MotzkinWord> enumerate_paths(PathKind kind, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  check_path_cap(n);
  std::vector<MotzkinWord> out;
  std::vector<Step> cur;
  gen_paths(kind, n, cur, 0, out);
  return out;
}

std::vector<LaguerreHistory> enumerate_histories(LHVariant variant, int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  check_path_cap(n);
  std::vector<LaguerreHistory> out;
  std::vector<Step> cur;
  std::vector<int> weights;
  gen_histories(variant, n, cur, weights, 0, out);
  return out;
}

}  // namespace permcf
