#include "dkernel/qseries.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace dk {

namespace {

Rational parse_rational(const std::string& tok) {
  Rational q;
  if (q.set_str(tok, 10) != 0)
    throw std::invalid_argument("read_qseries: bad rational '" + tok + "'");
  q.canonicalize();
  return q;
}

std::vector<Rational> split_rationals(const std::string& tok) {
  std::vector<Rational> out;
  std::string cur;
  std::istringstream is(tok);
  while (std::getline(is, cur, ',')) out.push_back(parse_rational(cur));
  return out;
}

}  // namespace

void write_qseries(std::ostream& os, const RationalQSeries& f) {
  os << "weight " << f.weight() << " precision " << f.precision() << " field Q\n";
  for (long n = 0; n <= f.precision(); ++n) os << n << " " << f.a(n).get_str() << "\n";
}

void write_qseries(std::ostream& os, const FieldQSeries& f) {
  const auto& field = f.a(0).field();
  os << "weight " << f.weight() << " precision " << f.precision() << " field poly:";
  for (long i = 0; i <= field->degree(); ++i) {
    if (i) os << ",";
    os << field->modulus().coeff(i).get_str();
  }
  os << "\n";
  for (long n = 0; n <= f.precision(); ++n) {
    os << n << " ";
    const auto& c = f.a(n).coords();
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ",";
      os << c[i].get_str();
    }
    os << "\n";
  }
}

std::variant<RationalQSeries, FieldQSeries> read_qseries(std::istream& is) {
  std::string kw1, kw3, kw5, field_spec;
  int weight;
  long prec;
  if (!(is >> kw1 >> weight >> kw3 >> prec >> kw5 >> field_spec) || kw1 != "weight" ||
      kw3 != "precision" || kw5 != "field")
    throw std::invalid_argument("read_qseries: malformed header");
  auto read_lines = [&](auto make_coeff) {
    using F = decltype(make_coeff(std::string()));
    std::vector<F> coeffs;
    coeffs.reserve(prec + 1);
    for (long n = 0; n <= prec; ++n) {
      long idx;
      std::string tok;
      if (!(is >> idx >> tok) || idx != n)
        throw std::invalid_argument("read_qseries: expected coefficient line " + std::to_string(n));
      coeffs.push_back(make_coeff(tok));
    }
    return coeffs;
  };
  if (field_spec == "Q") {
    auto coeffs = read_lines([](const std::string& tok) { return parse_rational(tok); });
    return RationalQSeries(weight, std::move(coeffs));
  }
  if (field_spec.rfind("poly:", 0) != 0)
    throw std::invalid_argument("read_qseries: bad field spec '" + field_spec + "'");
  Polynomial modulus(split_rationals(field_spec.substr(5)));
  auto field = NumberField::create(modulus);
  auto coeffs = read_lines([&](const std::string& tok) {
    return NumberFieldElement(field, split_rationals(tok));
  });
  return FieldQSeries(weight, std::move(coeffs));
}

}  // namespace dk
