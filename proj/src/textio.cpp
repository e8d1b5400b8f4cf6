#include "af/textio.hpp"

#include <sstream>
#include <vector>

namespace af {

namespace {

// --- quoting ---------------------------------------------------------------

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  out += '"';
  return out;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("afc parse: " + what);
}

// A line split into tokens: bare words and quoted strings.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      i++;
      continue;
    }
    if (line[i] == '"') {
      std::string cur;
      i++;
      for (;;) {
        if (i >= line.size()) fail("unterminated string");
        char ch = line[i++];
        if (ch == '"') break;
        if (ch == '\\') {
          if (i >= line.size()) fail("dangling escape");
          char es = line[i++];
          switch (es) {
            case '"': cur += '"'; break;
            case '\\': cur += '\\'; break;
            case 'n': cur += '\n'; break;
            case 'r': cur += '\r'; break;
            case 't': cur += '\t'; break;
            default: fail("bad escape");
          }
        } else {
          cur += ch;
        }
      }
      toks.push_back(std::move(cur));
    } else {
      std::size_t j = line.find(' ', i);
      if (j == std::string::npos) j = line.size();
      toks.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return toks;
}

struct Cursor {
  std::vector<std::vector<std::string>> lines;
  std::size_t pos = 0;

  explicit Cursor(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto toks = tokenize(line);
      if (!toks.empty()) lines.push_back(std::move(toks));
    }
  }

  const std::vector<std::string>& next(const std::string& expect_head) {
    if (pos >= lines.size()) fail("unexpected end (wanted " + expect_head + ")");
    const auto& l = lines[pos++];
    if (l[0] != expect_head)
      fail("expected '" + expect_head + "', got '" + l[0] + "'");
    return l;
  }
};

long to_long(const std::string& tok) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail("bad integer '" + tok + "'");
  }
  if (used != tok.size()) fail("bad integer '" + tok + "'");
  return v;
}

Zint to_zint(const std::string& tok) {
  try {
    return Zint(tok);
  } catch (const std::exception&) {
    fail("bad integer '" + tok + "'");
  }
}

CertKind cert_kind_from(const std::string& name) {
  for (CertKind k : {CertKind::Mod3Sign, CertKind::PlusMinusModN,
                     CertKind::FourNSieve, CertKind::TwoPrime,
                     CertKind::Sign2Adic})
    if (to_string(k) == name) return k;
  fail("unknown certificate kind '" + name + "'");
}

VerdictKind verdict_kind_from(const std::string& name) {
  for (VerdictKind k :
       {VerdictKind::Finite, VerdictKind::FiniteDescent,
        VerdictKind::ConditionalUnresolved, VerdictKind::Unknown,
        VerdictKind::Invalid})
    if (to_string(k) == name) return k;
  fail("unknown verdict kind '" + name + "'");
}

// --- certificate body (shared between both documents) ----------------------

void emit_cert_body(std::ostringstream& out, const Certificate& c) {
  out << "kind " << to_string(c.kind) << "\n";
  out << "target " << c.target.r << " " << sset_to_text(c.target.s) << "\n";
  out << "n " << c.n << "\n";
  out << "case " << c.tp_case << "\n";
  out << "pair " << c.q.get_str() << " " << c.l.get_str() << "\n";
  out << "derived " << (c.derived ? 1 : 0) << "\n";
  out << "steps " << c.steps.size() << "\n";
  for (const auto& s : c.steps) out << quote(s) << "\n";
}

Certificate parse_cert_body(Cursor& cur) {
  Certificate c;
  {
    const auto& l = cur.next("kind");
    if (l.size() != 2) fail("kind line");
    c.kind = cert_kind_from(l[1]);
  }
  {
    const auto& l = cur.next("target");
    if (l.size() != 3) fail("target line");
    c.target.r = to_long(l[1]);
    c.target.s = sset_from_text(l[2]);
  }
  {
    const auto& l = cur.next("n");
    if (l.size() != 2) fail("n line");
    c.n = to_long(l[1]);
  }
  {
    const auto& l = cur.next("case");
    if (l.size() != 2) fail("case line");
    c.tp_case = static_cast<int>(to_long(l[1]));
  }
  {
    const auto& l = cur.next("pair");
    if (l.size() != 3) fail("pair line");
    c.q = to_zint(l[1]);
    c.l = to_zint(l[2]);
  }
  {
    const auto& l = cur.next("derived");
    if (l.size() != 2) fail("derived line");
    c.derived = to_long(l[1]) != 0;
  }
  {
    const auto& l = cur.next("steps");
    if (l.size() != 2) fail("steps line");
    long k = to_long(l[1]);
    for (long i = 0; i < k; i++) {
      if (cur.pos >= cur.lines.size()) fail("missing step line");
      const auto& sl = cur.lines[cur.pos++];
      if (sl.size() != 1) fail("step line");
      c.steps.push_back(sl[0]);
    }
  }
  return c;
}

}  // namespace

// --- S sets ------------------------------------------------------------------

std::string sset_to_text(const SSet& s) { return s.empty() ? "-" : s.str(); }

SSet sset_from_text(const std::string& text) {
  if (text == "-") return SSet(std::vector<Zint>{});
  std::vector<Zint> primes;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    if (j == i) fail("empty entry in prime list '" + text + "'");
    primes.push_back(to_zint(text.substr(i, j - i)));
    i = j + 1;
  }
  try {
    return SSet(primes);
  } catch (const std::exception& e) {
    fail(std::string("bad prime list: ") + e.what());
  }
}

// --- certificates --------------------------------------------------------------

std::string print_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "afc 1 cert\n";
  emit_cert_body(out, c);
  out << "end\n";
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  Cursor cur(text);
  {
    const auto& l = cur.next("afc");
    if (l.size() != 3 || l[1] != "1" || l[2] != "cert")
      fail("bad header (want 'afc 1 cert')");
  }
  Certificate c = parse_cert_body(cur);
  cur.next("end");
  return c;
}

// --- verdicts --------------------------------------------------------------

std::string print_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "afc 1 verdict\n";
  out << "kind " << to_string(v.kind) << "\n";
  out << "input " << v.input.a.get_str() << " " << v.input.b.get_str() << " "
      << v.input.c.get_str() << "\n";
  out << "probabilistic " << (v.probabilistic ? 1 : 0) << "\n";
  out << "reason " << quote(v.reason) << "\n";
  out << "trace " << v.trace.size() << "\n";
  for (const auto& st : v.trace)
    out << quote(st.rule) << " " << quote(st.detail) << "\n";
  out << "certs " << v.certificates.size() << "\n";
  for (const auto& c : v.certificates) emit_cert_body(out, c);
  out << "end\n";
  return out.str();
}

Verdict parse_verdict(const std::string& text) {
  Cursor cur(text);
  {
    const auto& l = cur.next("afc");
    if (l.size() != 3 || l[1] != "1" || l[2] != "verdict")
      fail("bad header (want 'afc 1 verdict')");
  }
  Verdict v;
  {
    const auto& l = cur.next("kind");
    if (l.size() != 2) fail("kind line");
    v.kind = verdict_kind_from(l[1]);
  }
  {
    const auto& l = cur.next("input");
    if (l.size() != 4) fail("input line");
    v.input = Tern{to_zint(l[1]), to_zint(l[2]), to_zint(l[3])};
  }
  {
    const auto& l = cur.next("probabilistic");
    if (l.size() != 2) fail("probabilistic line");
    v.probabilistic = to_long(l[1]) != 0;
  }
  {
    const auto& l = cur.next("reason");
    if (l.size() != 2) fail("reason line");
    v.reason = l[1];
  }
  {
    const auto& l = cur.next("trace");
    if (l.size() != 2) fail("trace line");
    long k = to_long(l[1]);
    for (long i = 0; i < k; i++) {
      if (cur.pos >= cur.lines.size()) fail("missing trace line");
      const auto& tl = cur.lines[cur.pos++];
      if (tl.size() != 2) fail("trace step line");
      v.trace.push_back({tl[0], tl[1]});
    }
  }
  {
    const auto& l = cur.next("certs");
    if (l.size() != 2) fail("certs line");
    long k = to_long(l[1]);
    for (long i = 0; i < k; i++) v.certificates.push_back(parse_cert_body(cur));
  }
  cur.next("end");
  return v;
}

// --- human renderings --------------------------------------------------------

std::string format_certificate_human(const Certificate& c) {
  std::ostringstream out;
  out << "certificate: " << to_string(c.kind);
  if (c.n != 0) out << " (modulus " << c.n << ")";
  if (c.tp_case != 0)
    out << " (case " << c.tp_case << " on " << c.q.get_str() << ", "
        << c.l.get_str() << ")";
  if (c.derived) out << " [derived]";
  out << "\n  target: " << c.target.str() << "\n";
  for (const auto& s : c.steps) out << "  - " << s << "\n";
  return out.str();
}

std::string format_verdict_human(const Verdict& v) {
  std::ostringstream out;
  out << "triple (" << v.input.a.get_str() << ", " << v.input.b.get_str()
      << ", " << v.input.c.get_str() << "): " << to_string(v.kind) << "\n";
  out << "  reason: " << v.reason << "\n";
  if (v.probabilistic)
    out << "  note: a primality decision used a probable-prime test\n";
  if (!v.trace.empty()) {
    out << "  trace:\n";
    for (const auto& st : v.trace)
      out << "    " << st.rule << "  " << st.detail << "\n";
  }
  for (const auto& c : v.certificates) {
    std::istringstream lines(format_certificate_human(c));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  return out.str();
}

}  // namespace af
