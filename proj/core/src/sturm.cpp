#include "freeimm/sturm.hpp"

#include <sstream>

#include "freeimm/error.hpp"

namespace freeimm {

namespace {

int sign_at(const RatPoly& p, const ChainPoint& at) {
  switch (at.kind) {
    case ChainPoint::Kind::PlusInfinity:
      return sign(p.leading());
    case ChainPoint::Kind::MinusInfinity:
      return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
    case ChainPoint::Kind::Finite:
      return sign(p(at.value));
  }
  return 0;
}

char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

}  // namespace

std::vector<int> SturmChain::degrees() const {
  std::vector<int> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.degree());
  return d;
}

std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::PositiveOnR: return "positive_on_R";
    case SignVerdict::NegativeOnR: return "negative_on_R";
    case SignVerdict::PositiveOnInterval: return "positive_on_interval";
    case SignVerdict::NegativeOnInterval: return "negative_on_interval";
    case SignVerdict::HasRoots: return "has_roots";
  }
  return "has_roots";
}

SignVerdict sign_verdict_from_string(const std::string& s) {
  for (auto v : {SignVerdict::PositiveOnR, SignVerdict::NegativeOnR, SignVerdict::PositiveOnInterval,
                 SignVerdict::NegativeOnInterval, SignVerdict::HasRoots}) {
    if (to_string(v) == s) return v;
  }
  throw ValidationError({"unknown sign verdict \"" + s + "\""});
}

int PositivityCertificate::definite_sign() const {
  switch (verdict) {
    case SignVerdict::PositiveOnR:
    case SignVerdict::PositiveOnInterval:
      return 1;
    case SignVerdict::NegativeOnR:
    case SignVerdict::NegativeOnInterval:
      return -1;
    case SignVerdict::HasRoots:
      return 0;
  }
  return 0;
}

SturmChain sturm_sequence(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  SturmChain chain;
  chain.terms.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.terms.push_back(std::move(d));
  for (;;) {
    const auto& prev = chain.terms[chain.terms.size() - 2];
    const auto& cur = chain.terms.back();
    RatPoly r = rem(prev, cur);
    if (r.is_zero()) break;
    chain.terms.push_back(primitive_part(-r).first);
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const ChainPoint& at) {
  int count = 0;
  int last = 0;
  for (const auto& term : chain.terms) {
    int s = sign_at(term, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_real_roots(const RatPoly& p) {
  SturmChain chain = sturm_sequence(p);
  return sign_variations(chain, ChainPoint::minus_infinity()) -
         sign_variations(chain, ChainPoint::plus_infinity());
}

namespace {

void check_interval(const RatPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error("interval requires a < b");
  if (p(a) == 0) throw EndpointIsRoot("polynomial vanishes at interval endpoint " + format_rational(a));
  if (p(b) == 0) throw EndpointIsRoot("polynomial vanishes at interval endpoint " + format_rational(b));
}

}  // namespace

int count_roots_in_interval(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial();
  check_interval(p, a, b);
  SturmChain chain = sturm_sequence(p);
  return sign_variations(chain, ChainPoint::at(a)) - sign_variations(chain, ChainPoint::at(b));
}

PositivityCertificate certify_sign(const RatPoly& p, const SignDomain& domain) {
  if (p.is_zero()) throw ZeroPolynomial();
  PositivityCertificate cert;
  cert.polynomial = p;
  cert.domain = domain;
  cert.leading_coefficient = p.leading();
  SturmChain chain = sturm_sequence(p);
  if (domain.is_all_reals()) {
    cert.v_low = sign_variations(chain, ChainPoint::minus_infinity());
    cert.v_high = sign_variations(chain, ChainPoint::plus_infinity());
    cert.sample_point = 0;
  } else {
    const auto& [a, b] = *domain.interval;
    check_interval(p, a, b);
    cert.v_low = sign_variations(chain, ChainPoint::at(a));
    cert.v_high = sign_variations(chain, ChainPoint::at(b));
    cert.sample_point = a;
  }
  cert.real_root_count = cert.v_low - cert.v_high;
  cert.sample_value = p(cert.sample_point);
  const int s = sign(cert.sample_value);
  if (cert.real_root_count == 0 && s != 0) {
    if (domain.is_all_reals()) {
      cert.verdict = s > 0 ? SignVerdict::PositiveOnR : SignVerdict::NegativeOnR;
    } else {
      cert.verdict = s > 0 ? SignVerdict::PositiveOnInterval : SignVerdict::NegativeOnInterval;
    }
  } else {
    cert.verdict = SignVerdict::HasRoots;
  }
  return cert;
}

std::vector<SignTableRow> sign_table(const SturmChain& chain) {
  std::vector<SignTableRow> rows;
  rows.reserve(chain.terms.size());
  for (std::size_t i = 0; i < chain.terms.size(); ++i) {
    const auto& t = chain.terms[i];
    rows.push_back({static_cast<int>(i), t.degree(), sign_at(t, ChainPoint::minus_infinity()),
                    sign_at(t, ChainPoint::plus_infinity())});
  }
  return rows;
}

std::string render_sign_table(const std::vector<SignTableRow>& rows) {
  std::ostringstream os;
  os << " i | deg S_i | sign S_i(-inf) | sign S_i(+inf)\n";
  os << "---+---------+----------------+---------------\n";
  for (const auto& r : rows) {
    os.width(2);
    os << r.index << " | ";
    os.width(7);
    os << r.degree << " | ";
    os.width(14);
    os << sign_char(r.sign_minus_inf) << " | " << sign_char(r.sign_plus_inf) << "\n";
  }
  return os.str();
}

}  // namespace freeimm
