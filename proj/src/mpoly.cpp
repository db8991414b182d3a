#include "jacobi/mpoly.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace jacobi {

std::string VarId::name() const {
  std::string out = kind == VarKind::X ? "x" : "y";
  if (block != 1) {
    out += std::to_string(block);
    out += '_';
  }
  out += std::to_string(label);
  return out;
}

Monomial Monomial::var(VarId v, uint32_t e) {
  Monomial m;
  if (e > 0) m.factors.emplace_back(v, e);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors) d += static_cast<int>(e);
  return d;
}

uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors.reserve(factors.size() + o.factors.size());
  size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() ||
        (i < factors.size() && factors[i].first < o.factors[j].first)) {
      out.factors.push_back(factors[i++]);
    } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
      out.factors.push_back(o.factors[j++]);
    } else {
      out.factors.emplace_back(factors[i].first,
                               factors[i].second + o.factors[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::well_formed() const {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second == 0) return false;
    if (i > 0 && !(factors[i - 1].first < factors[i].first)) return false;
  }
  return true;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    const auto& [va, ea] = a.factors[i];
    const auto& [vb, eb] = b.factors[j];
    if (va < vb) return true;   // a touches an earlier variable
    if (vb < va) return false;
    if (ea != eb) return ea > eb;
    ++i;
    ++j;
  }
  return i < a.factors.size();
}

namespace detail {

uint64_t PackTable::pack(const Monomial& m) const {
  uint64_t key = 0;
  for (const auto& [v, e] : m.factors) {
    int s = slot_of(v);
    if (s < 0 || e > 255) throw MathError("monomial does not fit pack table");
    key |= static_cast<uint64_t>(e) << (8 * s);
  }
  return key;
}

Monomial PackTable::unpack(uint64_t key) const {
  Monomial m;
  for (size_t s = 0; s < vars.size(); ++s) {
    uint32_t e = static_cast<uint32_t>((key >> (8 * s)) & 0xff);
    if (e) m.factors.emplace_back(vars[s], e);
  }
  std::sort(m.factors.begin(), m.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

}  // namespace detail

Rat eval(const MPoly& p, const std::map<VarId, Rat>& point) {
  Rat total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (const auto& [v, e] : m.factors) {
      auto it = point.find(v);
      if (it == point.end())
        throw InputError("evaluation point misses variable " + v.name());
      for (uint32_t k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

MPoly substitute_linear(const MPoly& p,
                        const std::map<VarId, LinearForm>& images) {
  return substitute_linear_t<Rat, Rat>(p, images);
}

MPoly swap_kinds(const MPoly& p) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial sw;
    for (const auto& [v, e] : m.factors) {
      VarId w = v;
      w.kind = (v.kind == VarKind::X) ? VarKind::Y : VarKind::X;
      sw.factors.emplace_back(w, e);
    }
    std::sort(sw.factors.begin(), sw.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add_term(sw, c);
  }
  return out;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.factors.empty()) out += rat_to_string(a);
    bool need_star = !unit;
    for (const auto& [v, e] : m.factors) {
      if (need_star) out += "*";
      out += v.name();
      if (e > 1) {
        out += "^";
        out += std::to_string(e);
      }
      need_star = true;
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("polynomial parse error at position " +
                     std::to_string(i) + ": " + why);
  }

  std::string read_digits() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    return s.substr(start, i - start);
  }

  Rat read_rational() {
    std::string num = read_digits();
    if (i < s.size() && s[i] == '/') {
      ++i;
      num += '/';
      num += read_digits();
    }
    return rat_from_string(num);
  }

  std::pair<VarId, uint32_t> read_var() {
    skip_ws();
    char k = s[i];
    if (k != 'x' && k != 'y') fail("expected variable");
    ++i;
    std::string first = read_digits();
    VarId v;
    v.kind = (k == 'x') ? VarKind::X : VarKind::Y;
    if (i < s.size() && s[i] == '_') {
      ++i;
      v.block = static_cast<uint16_t>(std::stoul(first));
      v.label = static_cast<uint16_t>(std::stoul(read_digits()));
    } else {
      v.block = 1;
      v.label = static_cast<uint16_t>(std::stoul(first));
    }
    uint32_t e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      e = static_cast<uint32_t>(std::stoul(read_digits()));
    }
    return {v, e};
  }

  // One product of rationals and variable powers.
  void read_term(MPoly& out, bool negative) {
    Rat coeff = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= read_rational();
        any = true;
      } else if (c == 'x' || c == 'y') {
        auto [v, e] = read_var();
        mono = mono.times(Monomial::var(v, e));
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      char n = peek();
      if (std::isdigit(static_cast<unsigned char>(n)) || n == 'x' || n == 'y')
        continue;  // juxtaposition, e.g. "7 x0"
      break;
    }
    if (!any) fail("empty term");
    if (negative) coeff = -coeff;
    out.add_term(mono, coeff);
  }
};

}  // namespace

MPoly mpoly_from_string(const std::string& text) {
  Parser p(text);
  MPoly out;
  if (p.done()) throw InputError("empty polynomial text");
  if (p.peek() == '0') {
    size_t save = p.i;
    ++p.i;
    if (p.done()) return out;
    p.i = save;
  }
  bool negative = false;
  if (p.peek() == '-') {
    negative = true;
    ++p.i;
  } else if (p.peek() == '+') {
    ++p.i;
  }
  p.read_term(out, negative);
  while (!p.done()) {
    char c = p.peek();
    if (c == '+') {
      ++p.i;
      p.read_term(out, false);
    } else if (c == '-') {
      ++p.i;
      p.read_term(out, true);
    } else {
      p.fail("expected '+' or '-'");
    }
  }
  return out;
}

std::string to_json(const MPoly& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << "[\"" << rat_to_string(c) << "\",[";
    bool fv = true;
    for (const auto& [v, e] : m.factors) {
      if (!fv) os << ",";
      fv = false;
      os << "[\"" << (v.kind == VarKind::X ? "x" : "y") << "\"," << v.block
         << "," << v.label << "," << e << "]";
    }
    os << "]]";
  }
  os << "]";
  return os.str();
}

MPoly mpoly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("polynomial JSON must be an array");
  MPoly out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
        !term[1].is_array())
      throw InputError("polynomial JSON term must be [coeff, vars]");
    Rat c = rat_from_string(term[0].get<std::string>());
    Monomial m;
    for (const auto& f : term[1]) {
      if (!f.is_array() || f.size() != 4 || !f[0].is_string())
        throw InputError("polynomial JSON factor must be [kind,block,label,exp]");
      std::string kind = f[0].get<std::string>();
      if (kind != "x" && kind != "y")
        throw InputError("polynomial JSON kind must be x or y");
      VarId v;
      v.kind = kind == "x" ? VarKind::X : VarKind::Y;
      v.block = f[1].get<uint16_t>();
      v.label = f[2].get<uint16_t>();
      m = m.times(Monomial::var(v, f[3].get<uint32_t>()));
    }
    out.add_term(m, c);
  }
  return out;
}

PackedPoly pack_int(const MPoly& p) {
  PackedPoly out;
  out.table.vars = p.variables();
  if (out.table.vars.size() > 8)
    throw MathError("polynomial has too many variables to pack");
  out.terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    if (!rat_is_integer(c))
      throw MathError("packed storage requires integer coefficients");
    Int z = c.get_num();
    if (!z.fits_slong_p())
      throw MathError("packed coefficient exceeds 64-bit range");
    out.terms.emplace_back(out.table.pack(m), z.get_si());
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

MPoly unpack_int(const PackedPoly& p) {
  MPoly out;
  for (const auto& [k, c] : p.terms)
    out.add_term(p.table.unpack(k), Rat(static_cast<long>(c)));
  return out;
}

}  // namespace jacobi
