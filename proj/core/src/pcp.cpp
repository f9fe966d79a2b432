#include "cgl/pcp.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "cgl/error.hpp"

namespace cgl {

namespace {

struct Token {
  enum Kind { Ident, Int, Equals, Caret, LParen, RParen } kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, const std::string &source,
                            std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      if (j - i > 9)
        throw ParseError(source, lineno, col, "integer too large");
      out.push_back({Token::Int, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '=' || c == '^' || c == '(' || c == ')') {
      const Token::Kind k = c == '='   ? Token::Equals
                            : c == '^' ? Token::Caret
                            : c == '(' ? Token::LParen
                                       : Token::RParen;
      out.push_back({k, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(source, lineno, col,
                       std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

class LineParser {
public:
  LineParser(std::vector<Token> tokens, const std::string &source,
             std::size_t lineno, std::size_t line_length)
      : t_(std::move(tokens)), source_(source), line_(lineno),
        end_col_(line_length + 1) {}

  bool done() const { return pos_ == t_.size(); }
  const Token *peek() const { return done() ? nullptr : &t_[pos_]; }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(source_, line_, done() ? end_col_ : t_[pos_].column, msg);
  }
  [[noreturn]] void fail_at(const Token &tok, const std::string &msg) const {
    throw ParseError(source_, line_, tok.column, msg);
  }

  const Token &expect(Token::Kind k, const char *what) {
    if (done() || t_[pos_].kind != k)
      fail(std::string("expected ") + what);
    return t_[pos_++];
  }

  unsigned integer(const char *what) {
    const Token &tok = expect(Token::Int, what);
    return static_cast<unsigned>(std::stoul(tok.text));
  }

  void finish() {
    if (!done())
      fail("unexpected '" + t_[pos_].text + "'");
  }

private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  const std::string &source_;
  std::size_t line_;
  std::size_t end_col_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

PcPresentation parse_pcp(std::string_view text, std::string source) {
  PcPresentation pres;
  pres.source = source;
  bool have_header = false;
  bool have_gens = false;
  std::unordered_map<std::string, unsigned> index;
  std::vector<char> have_power;
  std::vector<std::vector<char>> have_comm;

  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    auto tokens = tokenize(lines[ln], source, lineno);
    if (tokens.empty())
      continue;
    LineParser lp(std::move(tokens), source, lineno, lines[ln].size());
    const Token kw = lp.expect(Token::Ident, "a statement keyword");

    if (kw.text == "pgroup") {
      if (have_header)
        lp.fail_at(kw, "duplicate pgroup statement");
      const Token *pt = lp.peek();
      pres.p = lp.integer("prime p");
      if (!is_prime(pres.p))
        lp.fail_at(*pt, "p = " + pt->text + " is not prime");
      const Token *nt = lp.peek();
      pres.n = lp.integer("generator count n");
      if (pres.n == 0)
        lp.fail_at(*nt, "generator count must be positive");
      lp.finish();
      have_header = true;
      continue;
    }
    if (!have_header)
      lp.fail_at(kw, "expected 'pgroup <p> <n>' before '" + kw.text + "'");

    if (kw.text == "gens") {
      if (have_gens)
        lp.fail_at(kw, "duplicate gens statement");
      while (!lp.done()) {
        const Token &name = lp.expect(Token::Ident, "generator name");
        if (index.count(name.text))
          lp.fail_at(name, "generator '" + name.text + "' declared twice");
        index[name.text] = static_cast<unsigned>(pres.names.size());
        pres.names.push_back(name.text);
      }
      if (pres.names.size() != pres.n)
        lp.fail_at(kw, "gens declares " + std::to_string(pres.names.size()) +
                           " generators, pgroup says " +
                           std::to_string(pres.n));
      have_gens = true;
      pres.power.assign(pres.n, {});
      have_power.assign(pres.n, 0);
      pres.comm.resize(pres.n);
      have_comm.resize(pres.n);
      for (unsigned j = 0; j < pres.n; ++j) {
        pres.comm[j].assign(j, {});
        have_comm[j].assign(j, 0);
      }
      continue;
    }

    if (kw.text != "pow" && kw.text != "comm")
      lp.fail_at(kw, "unknown statement '" + kw.text + "'");

    auto generator = [&](const char *what) {
      const Token &tok = lp.expect(Token::Ident, what);
      if (!have_gens)
        lp.fail_at(tok, "generator '" + tok.text +
                            "' referenced before the gens statement");
      auto it = index.find(tok.text);
      if (it == index.end())
        lp.fail_at(tok, "undeclared generator '" + tok.text + "'");
      return std::make_pair(it->second, tok);
    };

    unsigned lowest = 0; // word generators must have index >= lowest
    unsigned slot_i = 0, slot_j = 0;
    if (kw.text == "pow") {
      auto [i, tok] = generator("generator name");
      if (have_power[i])
        lp.fail_at(tok, "duplicate pow relation for '" + tok.text + "'");
      slot_i = i;
      lowest = i + 1;
    } else {
      auto [j, tj] = generator("generator name");
      auto [i, ti] = generator("generator name");
      if (j <= i)
        lp.fail_at(tj, "relation must have later generator first: comm " +
                           ti.text + " " + tj.text);
      if (have_comm[j][i])
        lp.fail_at(tj, "duplicate comm relation for '" + tj.text + " " +
                           ti.text + "'");
      slot_i = i;
      slot_j = j;
      lowest = j + 1;
    }
    lp.expect(Token::Equals, "'='");

    PcWord word;
    if (lp.peek() && lp.peek()->kind == Token::Int) {
      const Token &one = lp.expect(Token::Int, "'1'");
      if (one.text != "1")
        lp.fail_at(one, "the only integer word is '1'");
      lp.finish();
    } else {
      if (lp.done())
        lp.fail("expected a word");
      int last = -1;
      while (!lp.done()) {
        auto [g, tok] = generator("generator name");
        unsigned a = 1;
        if (lp.peek() && lp.peek()->kind == Token::Caret) {
          lp.expect(Token::Caret, "'^'");
          const Token *et = lp.peek();
          a = lp.integer("exponent");
          if (a < 1 || a >= pres.p)
            lp.fail_at(*et, "exponent must lie in 1.." +
                                std::to_string(pres.p - 1));
        }
        if (g < lowest)
          lp.fail_at(tok, "generator '" + tok.text +
                              "' is not later than the relation's "
                              "generators");
        if (static_cast<int>(g) <= last)
          lp.fail_at(tok, "word terms must appear in generator order");
        last = static_cast<int>(g);
        word.terms.push_back({g, a});
      }
    }
    if (kw.text == "pow") {
      pres.power[slot_i] = std::move(word);
      have_power[slot_i] = 1;
    } else {
      pres.comm[slot_j][slot_i] = std::move(word);
      have_comm[slot_j][slot_i] = 1;
    }
  }
  if (!have_header)
    throw ParseError(source, lines.size(), 1, "missing pgroup statement");
  if (!have_gens)
    throw ParseError(source, lines.size(), 1, "missing gens statement");
  return pres;
}

PcPresentation load_pcp(const std::string &path) {
  return parse_pcp(read_file(path), path);
}

Elem pcp_element(const PcPresentation &pres, const PcWord &word) {
  std::uint64_t x = 0;
  for (const auto &[g, a] : word.terms)
    x += a * ipow(pres.p, pres.n - 1 - g);
  return static_cast<Elem>(x);
}

Group realize_pcp(const PcPresentation &pres, std::size_t cap,
                  std::string descriptor) {
  validate_cap(cap);
  const unsigned p = pres.p;
  const unsigned n = pres.n;
  const std::uint64_t N = ipow(p, n);
  if (N > cap)
    throw CapExceeded("presentation " + pres.source + " has order " +
                      std::to_string(N) + " above the cap " +
                      std::to_string(cap));
  if (descriptor.empty())
    descriptor = "pcp:" + pres.source;

  std::vector<std::uint64_t> weight(n);
  for (unsigned i = 0; i < n; ++i)
    weight[i] = ipow(p, n - 1 - i);
  auto digit = [&](std::uint64_t x, unsigned i) {
    return static_cast<unsigned>(x / weight[i] % p);
  };

  // rm[x * n + i] = x * g_i, filled for i = n-1 down to 0.
  std::vector<std::uint32_t> rm(N * n, 0);
  auto mul_tail = [&](std::uint64_t x, std::uint64_t y, unsigned from) {
    for (unsigned j = from; j < n; ++j)
      for (unsigned k = digit(y, j); k > 0; --k)
        x = rm[x * n + j];
    return x;
  };

  for (unsigned i = n; i-- > 0;) {
    const std::uint64_t tails = weight[i];
    const std::uint64_t power = pcp_element(pres, pres.power[i]);
    // g_j^{g_i} = g_j [g_j, g_i] for j > i.
    std::vector<std::uint64_t> conj(n, 0);
    for (unsigned j = i + 1; j < n; ++j)
      conj[j] = mul_tail(weight[j], pcp_element(pres, pres.comm[j][i]), j + 1);
    // tail_conj[t] = t^{g_i} for t in <g_{i+1}, ..., g_n>.
    std::vector<std::uint64_t> tail_conj(tails, 0);
    for (std::uint64_t t = 0; t < tails; ++t) {
      std::uint64_t acc = 0;
      for (unsigned j = i + 1; j < n; ++j)
        for (unsigned k = digit(t, j); k > 0; --k)
          acc = mul_tail(acc, conj[j], i + 1);
      tail_conj[t] = acc;
    }
    for (std::uint64_t x = 0; x < N; ++x) {
      const std::uint64_t tail = x % tails;
      std::uint64_t head = x - tail;
      std::uint64_t rest = tail_conj[tail];
      if (digit(x, i) + 1 == p) {
        head -= (p - 1) * weight[i];
        rest = mul_tail(power, rest, i + 1);
      } else {
        head += weight[i];
      }
      rm[x * n + i] = static_cast<std::uint32_t>(head + rest);
    }
  }

  std::vector<std::uint16_t> table(N * N);
  for (std::uint64_t a = 0; a < N; ++a)
    table[a * N] = static_cast<std::uint16_t>(a);
  for (std::uint64_t b = 1; b < N; ++b) {
    unsigned last = n - 1;
    while (digit(b, last) == 0)
      --last;
    const std::uint64_t parent = b - weight[last];
    for (std::uint64_t a = 0; a < N; ++a)
      table[a * N + b] =
          static_cast<std::uint16_t>(rm[table[a * N + parent] * n + last]);
  }

  std::optional<Group> g;
  try {
    g.emplace(p, n, std::move(table), descriptor);
  } catch (const InvalidGroup &e) {
    throw InvalidGroup("inconsistent presentation " + pres.source + ": " +
                       e.what());
  }
  if (!check_associative(*g))
    throw InvalidGroup("inconsistent presentation " + pres.source +
                       ": collection is not associative");
  for (unsigned i = 0; i < n; ++i) {
    const Elem gi = static_cast<Elem>(weight[i]);
    if (g->pow(gi, p) != pcp_element(pres, pres.power[i]))
      throw InvalidGroup("inconsistent presentation " + pres.source +
                         ": power relation for " + pres.names[i] + " fails");
    for (unsigned j = i + 1; j < n; ++j) {
      const Elem gj = static_cast<Elem>(weight[j]);
      if (g->comm(gj, gi) != pcp_element(pres, pres.comm[j][i]))
        throw InvalidGroup("inconsistent presentation " + pres.source +
                           ": commutator relation [" + pres.names[j] + ", " +
                           pres.names[i] + "] fails");
    }
  }
  return *g;
}

PermGenSet parse_perm(std::string_view text, std::string source) {
  PermGenSet out;
  out.source = source;
  bool have_header = false;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t lineno = ln + 1;
    auto tokens = tokenize(lines[ln], source, lineno);
    if (tokens.empty())
      continue;
    LineParser lp(std::move(tokens), source, lineno, lines[ln].size());
    const Token kw = lp.expect(Token::Ident, "a statement keyword");
    if (kw.text == "perm") {
      if (have_header)
        lp.fail_at(kw, "duplicate perm statement");
      const Token &d = lp.expect(Token::Ident, "'degree'");
      if (d.text != "degree")
        lp.fail_at(d, "expected 'degree'");
      const Token *dt = lp.peek();
      out.degree = lp.integer("degree");
      if (out.degree == 0)
        lp.fail_at(*dt, "degree must be positive");
      lp.finish();
      have_header = true;
      continue;
    }
    if (kw.text != "gen")
      lp.fail_at(kw, "unknown statement '" + kw.text + "'");
    if (!have_header)
      lp.fail_at(kw, "expected 'perm degree <d>' before 'gen'");
    std::vector<std::uint32_t> img(out.degree);
    for (std::uint32_t k = 0; k < out.degree; ++k)
      img[k] = k;
    std::vector<char> used(out.degree, 0);
    if (lp.done())
      lp.fail("expected a cycle");
    while (!lp.done()) {
      lp.expect(Token::LParen, "'('");
      std::vector<std::uint32_t> cycle;
      while (lp.peek() && lp.peek()->kind == Token::Int) {
        const Token *pt = lp.peek();
        const unsigned point = lp.integer("point");
        if (point < 1 || point > out.degree)
          lp.fail_at(*pt, "point " + pt->text + " outside 1.." +
                              std::to_string(out.degree));
        if (used[point - 1])
          lp.fail_at(*pt, "point " + pt->text + " repeated");
        used[point - 1] = 1;
        cycle.push_back(point - 1);
      }
      lp.expect(Token::RParen, "')'");
      for (std::size_t c = 0; c < cycle.size(); ++c)
        img[cycle[c]] = cycle[(c + 1) % cycle.size()];
    }
    out.generators.push_back(std::move(img));
  }
  if (!have_header)
    throw ParseError(source, lines.size(), 1, "missing perm statement");
  if (out.generators.empty())
    throw ParseError(source, lines.size(), 1, "no generators");
  return out;
}

PermGenSet load_perm(const std::string &path) {
  return parse_perm(read_file(path), path);
}

PermGroup realize_perm(const PermGenSet &gens, std::size_t cap,
                       std::string descriptor) {
  validate_cap(cap);
  using Perm = std::vector<std::uint32_t>;
  const std::size_t d = gens.degree;
  auto compose = [&](const Perm &x, const Perm &y) {
    Perm r(d);
    for (std::size_t k = 0; k < d; ++k)
      r[k] = y[x[k]];
    return r;
  };

  Perm identity(d);
  for (std::uint32_t k = 0; k < d; ++k)
    identity[k] = k;
  std::vector<Perm> elems{identity};
  std::map<Perm, Elem> index{{identity, 0}};
  auto add = [&](Perm x) {
    if (elems.size() >= cap)
      throw CapExceeded("permutation group " + gens.source +
                        " exceeds the cap " + std::to_string(cap));
    index.emplace(x, static_cast<Elem>(elems.size()));
    elems.push_back(std::move(x));
  };

  // Dimino: elems is a union of right cosets of the previous subgroup.
  std::vector<Perm> used;
  for (const Perm &s : gens.generators) {
    if (s.size() != d)
      throw InvalidGroup("generator has the wrong degree");
    if (index.count(s))
      continue;
    used.push_back(s);
    const std::vector<Perm> prev = elems;
    auto add_coset = [&](const Perm &r) {
      for (const Perm &h : prev)
        add(compose(h, r));
    };
    const std::size_t block = prev.size();
    add_coset(s);
    for (std::size_t rep = block; rep < elems.size(); rep += block) {
      for (const Perm &t : used) {
        Perm x = compose(elems[rep], t);
        if (!index.count(x))
          add_coset(x);
      }
    }
  }

  const std::size_t N = elems.size();
  if (N == 1)
    throw InvalidGroup("permutation group " + gens.source + " is trivial");
  unsigned p = 2;
  while (N % p != 0)
    ++p;
  const int n = exact_log(N, p);
  if (n < 0)
    throw InvalidGroup("permutation group " + gens.source + " has order " +
                       std::to_string(N) + ", not a prime power");

  std::vector<std::uint16_t> table(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      table[a * N + b] =
          static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));
  if (descriptor.empty())
    descriptor = "perm:" + gens.source;
  return PermGroup{Group(p, static_cast<unsigned>(n), std::move(table),
                         std::move(descriptor)),
                   std::move(elems)};
}

} // namespace cgl
