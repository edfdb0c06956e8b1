#include "ffgold/curve.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include "ffgold/arith.hpp"
#include "ffgold/error.hpp"
#include "ffgold/galois_field.hpp"

namespace ffgold {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

struct Term {
  std::int64_t coeff;
  bool negative;
  std::string monomial;
};

std::vector<Term> split_terms(const std::string& side) {
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < side.size()) {
    bool negative = false;
    while (i < side.size() && (side[i] == '+' || side[i] == '-')) {
      if (side[i] == '-') negative = !negative;
      ++i;
    }
    std::size_t start = i;
    while (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) ++i;
    const bool has_coeff = i > start;
    const std::int64_t coeff = has_coeff ? std::stoll(side.substr(start, i - start)) : 1;
    if (i < side.size() && side[i] == '*') ++i;
    std::size_t mono_start = i;
    while (i < side.size() && side[i] != '+' && side[i] != '-') ++i;
    std::string mono = side.substr(mono_start, i - mono_start);
    mono.erase(std::remove(mono.begin(), mono.end(), '^'), mono.end());
    if (mono.empty() && !has_coeff) throw Error(ErrorKind::InvalidArgument, "empty term in curve equation");
    terms.push_back({coeff, negative, mono});
  }
  return terms;
}

}  // namespace

WeierstrassCurve parse_curve(std::string_view text, const PrimePower& q) {
  const auto field = GaloisField::get(static_cast<std::uint32_t>(q.p()), q.r());
  const std::string s = strip_spaces(text);
  auto element = [&](std::int64_t coeff, bool negative) {
    if (coeff < 0 || static_cast<std::uint64_t>(coeff) >= q.q()) {
      throw Error(ErrorKind::InvalidArgument, "curve coefficient outside F_q encoding range");
    }
    const auto e = static_cast<std::uint32_t>(coeff);
    return negative ? field->neg(e) : e;
  };

  WeierstrassCurve curve;
  if (s.find('=') == std::string::npos) {
    std::vector<std::string> items;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) items.push_back(item);
    if (items.size() != 5 || std::any_of(items.begin(), items.end(), [](const auto& i) { return i.empty(); })) {
      throw Error(ErrorKind::InvalidArgument, "expected five coefficients a1,a2,a3,a4,a6");
    }
    std::array<std::uint32_t*, 5> slots{&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6};
    for (std::size_t i = 0; i < 5; ++i) {
      const bool negative = items[i][0] == '-';
      *slots[i] = element(std::stoll(negative ? items[i].substr(1) : items[i]), negative);
    }
    return curve;
  }

  const std::size_t eq = s.find('=');
  bool saw_y2 = false, saw_x3 = false;
  for (const Term& t : split_terms(s.substr(0, eq))) {
    if (t.monomial == "y2") {
      if (t.coeff != 1 || t.negative) throw Error(ErrorKind::InvalidArgument, "y^2 must be monic");
      saw_y2 = true;
    } else if (t.monomial == "xy" || t.monomial == "yx") {
      curve.a1 = element(t.coeff, t.negative);
    } else if (t.monomial == "y") {
      curve.a3 = element(t.coeff, t.negative);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unsupported left-hand term '" + t.monomial + "'");
    }
  }
  for (const Term& t : split_terms(s.substr(eq + 1))) {
    if (t.monomial == "x3") {
      if (t.coeff != 1 || t.negative) throw Error(ErrorKind::InvalidArgument, "x^3 must be monic");
      saw_x3 = true;
    } else if (t.monomial == "x2") {
      curve.a2 = element(t.coeff, t.negative);
    } else if (t.monomial == "x") {
      curve.a4 = element(t.coeff, t.negative);
    } else if (t.monomial.empty()) {
      curve.a6 = element(t.coeff, t.negative);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unsupported right-hand term '" + t.monomial + "'");
    }
  }
  if (!saw_y2 || !saw_x3) throw Error(ErrorKind::InvalidArgument, "curve must contain y^2 and x^3");
  return curve;
}

std::string to_string(const WeierstrassCurve& c) {
  std::ostringstream out;
  out << c.a1 << ',' << c.a2 << ',' << c.a3 << ',' << c.a4 << ',' << c.a6;
  return out.str();
}

std::uint32_t discriminant(const WeierstrassCurve& c, const PrimePower& q) {
  const auto& f = *GaloisField::get(static_cast<std::uint32_t>(q.p()), q.r());
  auto k = [&](std::int64_t v) { return f.from_int(v); };
  auto mul = [&](auto... xs) {
    std::uint32_t out = 1;
    ((out = f.mul(out, xs)), ...);
    return out;
  };
  const auto b2 = f.add(mul(c.a1, c.a1), mul(k(4), c.a2));
  const auto b4 = f.add(mul(k(2), c.a4), mul(c.a1, c.a3));
  const auto b6 = f.add(mul(c.a3, c.a3), mul(k(4), c.a6));
  auto b8 = f.add(mul(c.a1, c.a1, c.a6), mul(k(4), c.a2, c.a6));
  b8 = f.sub(b8, mul(c.a1, c.a3, c.a4));
  b8 = f.add(b8, mul(c.a2, c.a3, c.a3));
  b8 = f.sub(b8, mul(c.a4, c.a4));
  std::uint32_t disc = f.neg(mul(b2, b2, b8));
  disc = f.sub(disc, mul(k(8), b4, b4, b4));
  disc = f.sub(disc, mul(k(27), b6, b6));
  disc = f.add(disc, mul(k(9), b2, b4, b6));
  return disc;
}

std::uint64_t enumerate_points(const WeierstrassCurve& curve, const PrimePower& q, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  const std::uint64_t size = checked_pow(q.q(), k);
  if (size > kPointBudget) {
    throw Error(ErrorKind::BudgetExceeded,
                "q^k = " + std::to_string(size) + " exceeds the point-enumeration budget");
  }
  const auto p = static_cast<std::uint32_t>(q.p());
  const auto sub = GaloisField::get(p, q.r());
  const auto field = GaloisField::get(p, q.r() * k);
  const GaloisField& f = *field;
  const auto a1 = f.embed(*sub, curve.a1);
  const auto a2 = f.embed(*sub, curve.a2);
  const auto a3 = f.embed(*sub, curve.a3);
  const auto a4 = f.embed(*sub, curve.a4);
  const auto a6 = f.embed(*sub, curve.a6);

  std::uint64_t count = 1;  // point at infinity
  if (p == 2) {
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const auto x2 = f.mul(x, x);
      const auto rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
      const auto lin = f.add(f.mul(a1, x), a3);
      if (lin == 0) {
        count += 1;  // squaring is bijective in characteristic 2
      } else {
        // y = lin*t turns the equation into t^2 + t = rhs/lin^2.
        const auto z = f.div(rhs, f.mul(lin, lin));
        if (f.trace(z) == 0) count += 2;
      }
    }
    return count;
  }
  const auto four_inv = f.inv(f.from_int(4));
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const auto x2 = f.mul(x, x);
    const auto rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
    const auto lin = f.add(f.mul(a1, x), a3);
    // (y + lin/2)^2 = rhs + lin^2/4
    const auto d = f.add(rhs, f.mul(f.mul(lin, lin), four_inv));
    if (d == 0) {
      count += 1;
    } else if (f.is_square(d)) {
      count += 2;
    }
  }
  return count;
}

}  // namespace ffgold
