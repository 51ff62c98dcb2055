#include "rspin/winding.hpp"

#include <numeric>

#include "rspin/text.hpp"

namespace rspin::winding {

Context::Context(Int r, Int g, Int b, std::vector<std::string> names)
    : modulus(r), genus(g), boundary(b), boundary_names(std::move(names)) {
  if (r < 0 || g < 0 || b < 0) fail(ErrorKind::InconsistentInput, "context needs r, g, b >= 0");
  if (boundary_names.empty())
    for (Int i = 1; i <= b; ++i) boundary_names.push_back("d" + std::to_string(i));
  if (static_cast<Int>(boundary_names.size()) != b)
    fail(ErrorKind::InconsistentInput, "boundary name count differs from boundary count");
}

Int pairing(const IntVec& x, const IntVec& y, Int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  if (x.size() < n || y.size() < n) fail(ErrorKind::InconsistentInput, "homology class too short");
  Int s = 0;
  for (std::size_t i = 0; i < n; i += 2)
    s = checked_add(s, checked_add(checked_mul(x[i], y[i + 1]), -checked_mul(x[i + 1], y[i])));
  return s;
}

Int twist_value(Int phi_a, Int phi_c, Int pair, Int exponent, Int r) {
  return reduce_residue(checked_add(phi_a, checked_mul(checked_mul(exponent, pair), phi_c)), r);
}

HomologyCurve act(const Context& ctx, const std::map<std::string, HomologyCurve>& curves,
                  const TwistWord& word, const HomologyCurve& curve) {
  if (curve.hclass.size() != ctx.rank())
    fail(ErrorKind::InconsistentInput, "class of '" + curve.name + "' has the wrong length");
  HomologyCurve out = curve;
  out.winding = ctx.reduce(out.winding);
  for (const auto& [name, e] : word) {
    auto it = curves.find(name);
    if (it == curves.end()) fail(ErrorKind::UnknownCurve, "word uses undeclared curve '" + name + "'");
    const auto& c = it->second;
    if (c.hclass.size() != ctx.rank())
      fail(ErrorKind::InconsistentInput, "class of '" + c.name + "' has the wrong length");
    Int p = pairing(out.hclass, c.hclass, ctx.genus);
    if (p == 0 || e == 0) continue;
    out.winding = twist_value(out.winding, c.winding, p, e, ctx.modulus);
    Int step = checked_mul(e, p);
    for (std::size_t i = 0; i < out.hclass.size(); ++i)
      out.hclass[i] = checked_add(out.hclass[i], checked_mul(step, c.hclass[i]));
  }
  return out;
}

bool coherence_check(const IntVec& values, Int chi, Int r) {
  Int s = 0;
  for (Int v : values) s = checked_add(s, v);
  return reduce_residue(s - chi, r) == 0;
}

bool is_admissible(const Context& ctx, const HomologyCurve& curve) {
  bool nonzero = false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * ctx.genus) && i < curve.hclass.size(); ++i)
    nonzero = nonzero || curve.hclass[i] != 0;
  return nonzero && ctx.reduce(curve.winding) == 0;
}

std::optional<IntVec> dual_witness(const IntVec& c, Int genus) {
  // <y, c> = sum y_{a_i} c_{b_i} - y_{b_i} c_{a_i}: solve coef . y = 1 by extended gcd.
  const auto n = static_cast<std::size_t>(2 * genus);
  IntVec coef(n);
  for (std::size_t i = 0; i < n; i += 2) {
    coef[i] = c[i + 1];
    coef[i + 1] = -c[i];
  }
  IntVec y(c.size(), 0);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (coef[i] == 0) continue;
    if (g == 0) {
      g = coef[i];
      y[i] = 1;
      continue;
    }
    // Bezout: s*g + t*coef[i] = gcd
    Int old_r = g, r = coef[i], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r; old_r = r; r = tmp;
      tmp = old_s - q * s; old_s = s; s = tmp;
      tmp = old_t - q * t; old_t = t; t = tmp;
    }
    for (std::size_t j = 0; j < i; ++j) y[j] = checked_mul(y[j], old_s);
    y[i] = old_t;
    g = old_r;
  }
  if (g == 1) return y;
  if (g == -1) {
    for (auto& v : y) v = -v;
    return y;
  }
  return std::nullopt;
}

WindingFunction WindingFunction::with_value(const std::string& curve, Int v) const {
  WindingFunction out = *this;
  out.values_[curve] = ctx_.reduce(v);
  return out;
}

WindingFunction WindingFunction::with_doubled_arc(const std::string& arc, Int twice) const {
  for (const auto& [name, w] : arcs_)
    if (name != arc && ((w ^ twice) & 1))
      fail(ErrorKind::InconsistentInput, "arc '" + arc + "' breaks the parity of the doubled arc values");
  WindingFunction out = *this;
  out.arcs_[arc] = reduce_residue(twice, 2 * ctx_.modulus);
  return out;
}

std::optional<Int> WindingFunction::value(const std::string& curve) const {
  auto it = values_.find(curve);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

WindingFunction WindingFunction::reduce_mod(Int r_new) const {
  if (r_new < 0) fail(ErrorKind::RefinementOrder, "modulus must be nonnegative");
  if (r_new == 0 ? ctx_.modulus != 0 : ctx_.modulus % r_new != 0)
    fail(ErrorKind::RefinementOrder, std::to_string(r_new) + " does not divide the modulus " +
                                         std::to_string(ctx_.modulus));
  Context c = ctx_;
  c.modulus = r_new;
  WindingFunction out(c);
  for (const auto& [k, v] : values_) out.values_[k] = reduce_residue(v, r_new);
  for (const auto& [k, v] : arcs_) out.arcs_[k] = reduce_residue(v, 2 * r_new);
  return out;
}

Int nonconmax_gcd(const IntVec& ks, Int r, Int r_prime) {
  if (ks.empty()) fail(ErrorKind::InconsistentInput, "empty orbit data");
  if (r < 0 || r_prime < 0) fail(ErrorKind::RefinementOrder, "moduli must be nonnegative");
  if (r == 0 ? r_prime != 0 : r_prime % r != 0)
    fail(ErrorKind::RefinementOrder, std::to_string(r) + " does not divide " + std::to_string(r_prime));
  IntVec args{r_prime};
  for (Int k : ks) args.push_back(checked_mul(k, r));
  return gcd_of(args);
}

QuadraticForm::QuadraticForm(int genus, std::vector<int> basis_values)
    : genus_(genus), q_(std::move(basis_values)) {
  if (genus < 0 || genus > 15) fail(ErrorKind::CostGuard, "mod 2 forms are supported for genus <= 15");
  if (q_.size() != static_cast<std::size_t>(2 * genus))
    fail(ErrorKind::InconsistentInput, "need one value per symplectic basis vector");
  for (auto& v : q_) v &= 1;
}

int pairing_mod2(Mask x, Mask y, int genus) {
  int s = 0;
  for (int i = 0; i < genus; ++i) {
    s ^= ((x >> (2 * i)) & (y >> (2 * i + 1)) & 1U);
    s ^= ((x >> (2 * i + 1)) & (y >> (2 * i)) & 1U);
  }
  return s;
}

Mask transvect(Mask x, Mask v, int genus) { return pairing_mod2(x, v, genus) ? x ^ v : x; }

int QuadraticForm::operator()(Mask x) const {
  int s = 0;
  for (int i = 0; i < 2 * genus_; ++i)
    if ((x >> i) & 1U) s ^= q_[i];
  for (int i = 0; i < genus_; ++i) s ^= ((x >> (2 * i)) & (x >> (2 * i + 1)) & 1U);
  return s;
}

int QuadraticForm::arf() const {
  int s = 0;
  for (int i = 0; i < genus_; ++i) s ^= q_[2 * i] & q_[2 * i + 1];
  return s;
}

QuadraticForm quadratic_form_from_windings(int genus, const IntVec& basis_windings, Int r) {
  if (r % 2 != 0) fail(ErrorKind::RefinementOrder, "a spin structure needs an even modulus");
  std::vector<int> q;
  for (Int w : basis_windings) q.push_back(static_cast<int>(reduce_residue(w + 1, 2)));
  return QuadraticForm(genus, q);
}

int arf_of_assignment(int genus, Mask assignment) {
  int s = 0;
  for (int i = 0; i < genus; ++i) s ^= ((assignment >> (2 * i)) & (assignment >> (2 * i + 1)) & 1U);
  return s;
}

ArfCensus enumerate_forms(int genus) {
  if (genus < 0) fail(ErrorKind::InconsistentInput, "genus must be nonnegative");
  if (genus > kMaxCensusGenus)
    fail(ErrorKind::CostGuard, "census refused above genus " + std::to_string(kMaxCensusGenus));
  ArfCensus c;
  const Mask total = Mask{1} << (2 * genus);
  for (Mask m = 0; m < total; ++m) (arf_of_assignment(genus, m) ? c.odd : c.even) += 1;
  return c;
}

WindingScript parse_script(const std::string& src) {
  text::Cursor cur(text::tokenize(src));
  WindingScript s;
  bool have_ctx = false;
  while (!cur.at_end()) {
    std::string kw = cur.word();
    if (kw == "context") {
      Int g = cur.integer(), b = cur.integer(), r = cur.integer();
      s.ctx = Context(r, g, b);
      have_ctx = true;
    } else if (kw == "curve") {
      if (!have_ctx) cur.error("'context' must come before curves");
      HomologyCurve c;
      c.name = cur.word();
      cur.expect("=");
      cur.expect("(");
      c.hclass = cur.integers_until(")");
      cur.expect(")");
      cur.expect(":");
      c.winding = s.ctx.reduce(cur.integer());
      if (c.hclass.size() != s.ctx.rank())
        cur.error("class of '" + c.name + "' needs " + std::to_string(s.ctx.rank()) + " coordinates");
      for (const auto& other : s.curves)
        if (other.name == c.name) cur.error("duplicate curve '" + c.name + "'");
      s.curves.push_back(std::move(c));
    } else if (kw == "word") {
      while (cur.peek().kind == text::TokKind::Word) {
        std::string name = cur.word();
        Int e = 1;
        if (cur.accept("^")) e = cur.integer();
        s.word.emplace_back(name, e);
      }
    } else {
      cur.error("unknown statement '" + kw + "'");
    }
    cur.expect(";");
  }
  if (!have_ctx) fail(ErrorKind::Parse, "missing context statement");
  return s;
}

}  // namespace rspin::winding
