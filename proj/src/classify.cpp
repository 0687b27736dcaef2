#include "holant/classify.hpp"

#include <numeric>
#include <sstream>

#include "holant/errors.hpp"
#include "holant/linalg.hpp"
#include "holant/transform.hpp"

namespace holant {

namespace {

SymmetricSignature tensor_power_sum(int k, const Scalar& a0, const Scalar& a1, const Scalar& c, const Scalar& b0,
                                    const Scalar& b1) {
  std::vector<Scalar> e;
  for (int j = 0; j <= k; ++j)
    e.push_back(pow(a0, k - j) * pow(a1, j) + c * pow(b0, k - j) * pow(b1, j));
  return SymmetricSignature(std::move(e));
}

// lambda ([1,0]^k + i^r [0,1]^k) and its F2, F3 relatives with lambda = 1.
SymmetricSignature affine_base(int family, int k, int r) {
  const Scalar ir = i_pow(r);
  const Scalar i = Scalar::i();
  switch (family) {
    case 1: return tensor_power_sum(k, 1, 0, ir, 0, 1);
    case 2: return tensor_power_sum(k, 1, 1, ir, 1, -1);
    default: return tensor_power_sum(k, 1, i, ir, 1, -i);
  }
}

// Indices of the support positions for a given parity.
std::vector<int> parity_positions(int n, Parity p) {
  std::vector<int> idx;
  for (int k = p == Parity::odd ? 1 : 0; k <= n; k += 2) idx.push_back(k);
  return idx;
}

int matchgate_form(Parity p, int n) {
  if (p == Parity::even) return n % 2 == 0 ? 1 : 2;
  return n % 2 == 1 ? 3 : 4;
}

Parity form_parity(int form) { return form <= 2 ? Parity::even : Parity::odd; }

SymmetricSignature matchgate_signature(int form, int n, const Scalar& lambda, const Scalar& alpha, const Scalar& beta) {
  std::vector<Scalar> e(static_cast<std::size_t>(n) + 1, Scalar(0));
  const auto idx = parity_positions(n, form_parity(form));
  const long m = static_cast<long>(idx.size()) - 1;
  for (long k = 0; k <= m; ++k)
    e[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] = lambda * pow(alpha, m - k) * pow(beta, k);
  return SymmetricSignature(std::move(e));
}

int tag_form(const std::string& tag) { return tag.back() - '0'; }

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Witness for a degenerate f = lambda (a,b)^n.
FamilyWitness degenerate_witness(const std::string& tag, const SymmetricSignature& f, const DegenerateForm& d) {
  FamilyWitness w;
  w.tag = tag;
  w.arity = f.arity();
  w.lambda = d.lambda;
  w.alpha = d.a;
  w.beta = d.b;
  return w;
}

std::string str(const Scalar& z) { return to_string(z); }

}  // namespace

SymmetricSignature evaluate(const FamilyWitness& w) {
  const int n = w.arity;
  if (w.tag == "F1" || w.tag == "F2" || w.tag == "F3")
    return w.lambda * affine_base(w.tag[1] - '0', n, w.r.value_or(0));
  if (w.tag == "degenerate-affine" || w.tag == "product-degenerate")
    return w.lambda * tensor_power_sum(n, *w.alpha, *w.beta, 0, 0, 0);
  if (w.tag == "disequality") return w.lambda * disequality();
  if (w.tag == "generalized-equality") {
    std::vector<Scalar> e(static_cast<std::size_t>(n) + 1, Scalar(0));
    e.front() = *w.alpha;
    e.back() = n == 0 ? *w.alpha + *w.beta : *w.beta;
    return w.lambda * SymmetricSignature(std::move(e));
  }
  if (starts_with(w.tag, "matchgate-form-") || starts_with(w.tag, "matchgate-hat-case-")) {
    const int form = starts_with(w.tag, "matchgate-form-") ? tag_form(w.tag) : w.form.value_or(1);
    return matchgate_signature(form, n, w.lambda, *w.alpha, *w.beta);
  }
  throw InternalError("unknown family tag '" + w.tag + "'");
}

std::string describe(const FamilyWitness& w) {
  std::ostringstream os;
  os << w.tag << " arity=" << w.arity << " lambda=" << str(w.lambda);
  if (w.r) os << " r=" << *w.r;
  if (w.alpha) os << " alpha=" << str(*w.alpha);
  if (w.beta) os << " beta=" << str(*w.beta);
  if (w.epsilon) os << " epsilon=" << (*w.epsilon > 0 ? "+1" : "-1");
  if (w.form) os << " form=" << *w.form;
  if (w.hadamard) os << " (describes hat(f))";
  return os.str();
}

std::optional<FamilyWitness> in_A(const SymmetricSignature& f) {
  const int n = f.arity();
  if (auto d = degenerate_form(f)) {
    if (d->lambda.is_zero() || n == 0) return degenerate_witness("degenerate-affine", f, *d);
    // Unary factor must be projectively [1,0], [0,1] or [1,i^r].
    if (d->a.is_zero() || d->b.is_zero() || power_of_i(d->b / d->a)) return degenerate_witness("degenerate-affine", f, *d);
    return std::nullopt;
  }
  for (int family = 1; family <= 3; ++family)
    for (int r = 0; r < 4; ++r) {
      const SymmetricSignature base = affine_base(family, n, r);
      if (auto c = projective_factor(f.as_vector(), base.as_vector())) {
        FamilyWitness w;
        w.tag = "F" + std::to_string(family);
        w.arity = n;
        w.lambda = *c;
        w.r = r;
        return w;
      }
    }
  return std::nullopt;
}

std::optional<FamilyWitness> in_P(const SymmetricSignature& f) {
  const int n = f.arity();
  if (auto d = degenerate_form(f)) return degenerate_witness("product-degenerate", f, *d);
  if (n == 2 && f[0].is_zero() && f[2].is_zero()) {
    FamilyWitness w;
    w.tag = "disequality";
    w.arity = 2;
    w.lambda = f[1];
    return w;
  }
  for (int k = 1; k < n; ++k)
    if (!f[k].is_zero()) return std::nullopt;
  FamilyWitness w;
  w.tag = "generalized-equality";
  w.arity = n;
  w.alpha = f[0];
  w.beta = f[n];
  return w;
}

std::optional<FamilyWitness> in_M(const SymmetricSignature& f) {
  const Parity p = parity(f);
  if (p == Parity::none) return std::nullopt;
  const int n = f.arity();
  std::vector<Scalar> support;
  for (int k : parity_positions(n, p)) support.push_back(f[k]);
  auto d = degenerate_form(SymmetricSignature(std::move(support)));
  if (!d) return std::nullopt;
  FamilyWitness w;
  w.tag = "matchgate-form-" + std::to_string(matchgate_form(p, n));
  w.arity = n;
  w.lambda = d->lambda;
  w.alpha = d->a;
  w.beta = d->b;
  return w;
}

std::optional<FamilyWitness> in_Phat(const SymmetricSignature& f) {
  auto w = in_P(hat(f));
  if (w) w->hadamard = true;
  return w;
}

std::optional<FamilyWitness> in_Mhat(const SymmetricSignature& f) {
  const SymmetricSignature h = hat(f);
  auto w = in_M(h);
  if (!w) return std::nullopt;
  const int n = f.arity();
  const int form = tag_form(w->tag);
  w->hadamard = true;
  w->form = form;
  if (n >= 1 && projective_equal(f, hadamard_matchgate_case3(n, 1))) {
    w->tag = "matchgate-hat-case-3";
  } else if (n >= 1 && projective_equal(f, hadamard_matchgate_case2(n, 1))) {
    w->tag = "matchgate-hat-case-2";
  } else {
    w->tag = "matchgate-hat-case-1";
    w->epsilon = form_parity(form) == Parity::even ? 1 : -1;
  }
  return w;
}

SymmetricSignature hadamard_matchgate_case1(int n, const Scalar& lambda, const Scalar& alpha, const Scalar& beta,
                                            int epsilon) {
  const Scalar p = alpha + beta, m = alpha - beta;
  std::vector<Scalar> e;
  for (int l = 0; l <= n; ++l)
    e.push_back(lambda * (pow(p, n - l) * pow(m, l) + Scalar(epsilon) * pow(m, n - l) * pow(p, l)));
  return SymmetricSignature(std::move(e));
}

SymmetricSignature hadamard_matchgate_case2(int n, const Scalar& lambda) {
  std::vector<Scalar> e;
  for (int l = 0; l <= n; ++l) e.push_back(lambda * Scalar(static_cast<long>((n - 2 * l) * (l % 2 ? -1 : 1))));
  return SymmetricSignature(std::move(e));
}

SymmetricSignature hadamard_matchgate_case3(int n, const Scalar& lambda) {
  std::vector<Scalar> e;
  for (int l = 0; l <= n; ++l) e.push_back(lambda * Scalar(static_cast<long>(n - 2 * l)));
  return SymmetricSignature(std::move(e));
}

VennFlags venn_flags(const SymmetricSignature& f) {
  return VennFlags{in_A(f), in_P(f), in_M(f), in_Phat(f), in_Mhat(f)};
}

namespace {

Verdict tractable(std::string label, std::string rule) {
  Verdict v;
  v.outcome = Outcome::tractable;
  v.label = std::move(label);
  v.rule = std::move(rule);
  return v;
}

Verdict hard(std::string label, std::string rule, std::vector<SymmetricSignature> witnesses) {
  Verdict v;
  v.outcome = Outcome::hard;
  v.label = std::move(label);
  v.rule = std::move(rule);
  v.witnesses = std::move(witnesses);
  return v;
}

void require_binary(const SymmetricSignature& f) {
  if (f.arity() != 2) throw DomainError("expected a binary signature, got arity " + std::to_string(f.arity()));
}

// Degree-prescribed conditions on an edge function [e0,e1,e2] whose two endpoint weights
// enter as e0^d w0 and e2^d w2 (w0 = w2 = 1 for the plain theorem).
std::optional<std::pair<int, std::string>> degree_prescribed_case(const SymmetricSignature& e, long d, const Scalar& w0,
                                                                  const Scalar& w2) {
  const Scalar p = e[0] * e[2], q = e[1] * e[1];
  if (p == q) return std::make_pair(2, std::string("f0*f2 = f1^2"));
  if (e[1].is_zero()) return std::make_pair(3, std::string("f1 = 0"));
  const Scalar lhs = pow(e[0], d) * w0, rhs = pow(e[2], d) * w2;
  if (p == -q && lhs == -rhs) return std::make_pair(4, std::string("f0*f2 = -f1^2 and f0^d = -f2^d"));
  if (lhs == rhs) return std::make_pair(5, std::string("f0^d = f2^d"));
  return std::nullopt;
}

}  // namespace

Verdict classify_binary_gh(const SymmetricSignature& f) {
  require_binary(f);
  const Scalar p = f[0] * f[2], q = f[1] * f[1];
  if (p == q) return tractable("case 1", "f0*f2 = f1^2");
  if (f[1].is_zero()) return tractable("case 2", "f1 = 0");
  if (p == -q && f[0] == -f[2]) return tractable("case 3", "f0*f2 = -f1^2 and f0 = -f2");
  if (f[0] == f[2]) return tractable("case 4", "f0 = f2");
  return hard("hard", "none of the four tractability conditions holds", {f});
}

Verdict classify_degree_prescribed(const SymmetricSignature& f, const std::set<int>& degrees) {
  require_binary(f);
  if (degrees.empty()) throw DomainError("degree set is empty");
  int d = 0;
  for (int k : degrees) {
    if (k <= 0) throw DomainError("degrees must be positive");
    d = std::gcd(d, k);
  }
  if (*degrees.rbegin() <= 2) return tractable("case 1", "degrees within {1,2}");
  Verdict v;
  if (auto c = degree_prescribed_case(f, d, 1, 1))
    v = tractable("case " + std::to_string(c->first), c->second);
  else
    v = hard("hard", "none of the five tractability conditions holds", {f});
  v.details.emplace_back("d", std::to_string(d));
  return v;
}

Verdict classify_arity4(const SymmetricSignature& f) {
  if (f.arity() != 4) throw DomainError("expected an arity-4 signature, got arity " + std::to_string(f.arity()));
  if (is_degenerate(f)) return tractable("degenerate", "f is degenerate");
  const auto kernel = kernel_basis(hankel3(f));
  if (kernel.empty()) {
    Verdict v = hard("hard", "compressed signature matrix is nonsingular", {f});
    v.details.emplace_back("compressed_det", str(det(compressed_matrix(f))));
    return v;
  }
  if (kernel.size() >= 2) throw InternalError("two-dimensional recurrence kernel for a non-degenerate signature");
  Scalar a = kernel[0](0), b = kernel[0](1), c = kernel[0](2);
  auto kernel_text = [&] { return "(" + str(a) + ", " + str(b) + ", " + str(c) + ")"; };
  if (a.is_zero() && c.is_zero()) return tractable("P-transformable", "f is a generalized equality");

  const Scalar disc = b * b - Scalar(4) * a * c;
  if (!disc.is_zero()) {
    Vector r1(2), r2(2);
    if (!c.is_zero()) {
      auto root = sqrt_exact(disc);
      if (!root) throw Undecidable("recurrence " + kernel_text() + " has roots outside Q(i)");
      r1 << 1, (-b + *root) / (Scalar(2) * c);
      r2 << 1, (-b - *root) / (Scalar(2) * c);
    } else {
      r1 << b, -a;
      r2 << 0, 1;
    }
    // f = s r1^(x)4 + t r2^(x)4.
    Matrix sys(5, 3);
    for (int k = 0; k <= 4; ++k) {
      sys(k, 0) = pow(r1(0), 4 - k) * pow(r1(1), k);
      sys(k, 1) = pow(r2(0), 4 - k) * pow(r2(1), k);
      sys(k, 2) = -f[k];
    }
    const auto st = kernel_basis(sys);
    if (st.size() != 1 || st[0](2).is_zero()) throw InternalError("recurrence roots do not decompose f");
    const Scalar s = st[0](0) / st[0](2), t = st[0](1) / st[0](2);
    Matrix tm(2, 2);
    tm.col(0) = r1;
    tm.col(1) = r2;
    const SymmetricSignature edge = binary_conjugate(SymmetricSignature{1, 0, 1}, tm);
    Verdict v;
    if (auto cs = degree_prescribed_case(edge, 4, s * s, t * t))
      v = tractable("degree-prescribed case " + std::to_string(cs->first), cs->second);
    else
      v = hard("hard", "transformed to =4 with an edge function failing the degree-prescribed conditions", {f});
    v.details.emplace_back("kernel", kernel_text());
    v.details.emplace_back("transform", to_string(tm));
    v.details.emplace_back("weights", "[" + str(s) + ",0,0,0," + str(t) + "]");
    v.details.emplace_back("edge", to_string(edge));
    return v;
  }

  SymmetricSignature g = f;
  bool reversed = false;
  if (c.is_zero()) {
    g = reverse(f);
    std::swap(a, c);
    reversed = true;
  }
  const Scalar alpha = -b / (Scalar(2) * c);
  auto annotate = [&](Verdict v) {
    v.details.emplace_back("kernel", kernel_text());
    v.details.emplace_back("alpha", str(alpha));
    v.details.emplace_back("reversed", reversed ? "yes" : "no");
    return v;
  };
  if (alpha * alpha == Scalar(-1)) return annotate(tractable("vanishing", "double root alpha = +-i"));
  const SymmetricSignature fh = apply(mat({{1, alpha}, {alpha, -1}}), g);
  if (!fh[2].is_zero() || !fh[3].is_zero() || !fh[4].is_zero() || fh[1].is_zero())
    throw InternalError("double-root transform produced " + to_string(fh) + ", not [v,1,0,0,0]");
  const Scalar v = fh[0] / fh[1];
  Verdict out = v.is_zero() ? tractable("M-transformable", "transformed to [0,1,0,0,0]")
                            : hard("hard", "transformed to [v,1,0,0,0] with v != 0", {f});
  out.details.emplace_back("v", str(v));
  return annotate(out);
}

namespace {

struct Member {
  SymmetricSignature used;  // degenerate members reduced to their unary factor
  bool cls[3];              // A, Phat, M
};

Verdict classify_set(const std::vector<SymmetricSignature>& set, const std::vector<SymmetricSignature>& report,
                     const char* const names[3]) {
  std::vector<Member> members;
  for (const auto& f : set) {
    Member m{f, {true, true, true}};
    if (!f.is_zero()) {
      if (auto d = degenerate_form(f); d && f.arity() >= 1) m.used = SymmetricSignature{d->a, d->b};
      m.cls[0] = in_A(m.used).has_value();
      m.cls[1] = in_Phat(m.used).has_value();
      m.cls[2] = in_M(m.used).has_value();
    }
    members.push_back(m);
  }
  std::string common;
  for (int c = 0; c < 3; ++c) {
    bool all = true;
    for (const auto& m : members) all = all && m.cls[c];
    if (all) common += (common.empty() ? "" : ",") + std::string(names[c]);
  }
  if (!common.empty()) return tractable(common, "every signature lies in " + common);
  for (std::size_t k = 0; k < members.size(); ++k)
    if (!members[k].cls[0] && !members[k].cls[1] && !members[k].cls[2])
      return hard("single", std::string("signature outside ") + names[0] + ", " + names[1] + " and " + names[2],
                  {report[k]});
  for (std::size_t j = 0; j < members.size(); ++j)
    for (std::size_t k = j + 1; k < members.size(); ++k) {
      bool share = false;
      for (int c = 0; c < 3; ++c) share = share || (members[j].cls[c] && members[k].cls[c]);
      if (!share) return hard("mixing", "two signatures share no tractable class", {report[j], report[k]});
    }
  throw InternalError("set lies in no common class yet every pair shares one");
}

}  // namespace

Verdict classify_plcsp_hat(const std::vector<SymmetricSignature>& set) {
  static const char* const names[3] = {"A", "P-hat", "M"};
  return classify_set(set, set, names);
}

Verdict classify_plcsp(const std::vector<SymmetricSignature>& set) {
  static const char* const names[3] = {"A", "P", "M-hat"};
  std::vector<SymmetricSignature> hats;
  for (const auto& f : set) hats.push_back(hat(f));
  return classify_set(hats, set, names);
}

}  // namespace holant
