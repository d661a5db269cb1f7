#include "gnorm/specdoc.hpp"

#include <algorithm>
#include <sstream>

#include "gnorm/fp.hpp"

namespace gnorm {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::invalid_argument, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::string join_from(const std::vector<std::string>& toks, size_t from) {
  std::string out;
  for (size_t k = from; k < toks.size(); ++k) {
    if (k > from) out += " ";
    out += toks[k];
  }
  return out;
}

}  // namespace

Perm parse_cycles(const std::string& s, int degree) {
  Perm p = perm_identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size()) throw Error(Errc::invalid_argument, "empty permutation");
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw Error(Errc::invalid_argument, "malformed cycle: expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw Error(Errc::invalid_argument, "malformed cycle: expected a point");
      int v = std::stoi(s.substr(i, j - i));
      if (v < 1 || v > degree)
        throw Error(Errc::invalid_argument,
                    "cycle point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
      i = j;
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (p[from] != from) throw Error(Errc::invalid_argument, "point repeated across cycles");
      p[from] = to;
    }
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

const GroupSpecDoc::NamedGroup* GroupSpecDoc::find_group(const std::string& name) const {
  for (const NamedGroup& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

const GroupSpecDoc::HomDecl* GroupSpecDoc::find_hom(const std::string& name) const {
  for (const HomDecl& h : homs)
    if (h.name == name) return &h;
  return nullptr;
}

namespace {

// words for REL lines: letters a..z are generators 1..26, optional ^exponent
Word parse_rel_word(const std::string& s, int n_generators, int line) {
  Word w;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c < 'a' || c > 'z') fail(line, std::string("unexpected character '") + c + "' in word");
    int gen = c - 'a' + 1;
    if (gen > n_generators) fail(line, std::string("generator '") + c + "' not declared");
    ++i;
    long exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t j = i;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i || (s[i] == '-' && j == i + 1)) fail(line, "malformed exponent");
      exp = std::stol(s.substr(i, j - i));
      i = j;
    }
    for (long k = 0; k < std::labs(exp); ++k) w.push_back(exp > 0 ? gen : -gen);
  }
  return w;
}

// MAP right-hand sides: cycles, "#index", or gK, combined with '*'
int parse_element(const std::string& s, const GroupSpecDoc::NamedGroup& target, int line) {
  const FiniteGroup& G = *target.group;
  std::vector<std::string> factors;
  std::string cur;
  for (char c : s) {
    if (c == '*') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  int value = 0;
  for (std::string f : factors) {
    while (!f.empty() && isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
    while (!f.empty() && isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    if (f.empty()) fail(line, "empty factor in element expression");
    int v;
    if (f == "()" || f == "e") {
      v = 0;
    } else if (std::all_of(f.begin(), f.end(),
                           [](unsigned char c) { return std::isdigit(c); })) {
      v = std::stoi(f);
      if (v < 0 || v >= G.order) fail(line, "element index out of range");
    } else if (f[0] == 'g' && f.size() > 1 && isdigit(static_cast<unsigned char>(f[1]))) {
      int k = std::stoi(f.substr(1));
      if (k < 1 || k > static_cast<int>(G.generators.size()))
        fail(line, "target has no generator g" + std::to_string(k));
      v = G.generators[k - 1];
    } else if (f[0] == '(') {
      if (target.degree == 0) fail(line, "cycle notation needs a permutation group target");
      Perm p;
      try {
        p = parse_cycles(f, target.degree);
      } catch (const Error& e) {
        fail(line, e.what());
      }
      auto it = std::find(G.perm_witness.begin(), G.perm_witness.end(), p);
      if (it == G.perm_witness.end()) fail(line, "permutation is not in group " + target.name);
      v = static_cast<int>(it - G.perm_witness.begin());
    } else {
      fail(line, "cannot parse element '" + f + "'");
    }
    value = G.op(value, v);
  }
  return value;
}

int gen_name_to_index(const std::string& name, int n_gens, int line) {
  if (name == "g" && n_gens >= 1) return 0;
  if (name.size() >= 2 && name[0] == 'g') {
    int k = std::stoi(name.substr(1));
    if (k >= 1 && k <= n_gens) return k - 1;
  }
  fail(line, "unknown generator name '" + name + "'");
}

}  // namespace

GroupSpecDoc parse_spec(const std::string& text) {
  GroupSpecDoc doc;
  std::vector<std::string> lines;
  {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) lines.push_back(l);
  }
  size_t i = 0;
  auto next_meaningful = [&]() -> int {
    while (i < lines.size()) {
      std::string l = lines[i];
      size_t h = l.find('#');
      if (h != std::string::npos) l = l.substr(0, h);
      if (!tokenize(l).empty()) return static_cast<int>(i);
      ++i;
    }
    return -1;
  };
  auto get_tokens = [&](int idx) {
    std::string l = lines[idx];
    size_t h = l.find('#');
    if (h != std::string::npos) l = l.substr(0, h);
    return tokenize(l);
  };

  while (next_meaningful() >= 0) {
    int line0 = static_cast<int>(i) + 1;
    std::vector<std::string> head = get_tokens(static_cast<int>(i));
    ++i;
    if (head[0] == "GROUP") {
      if (head.size() != 2) fail(line0, "GROUP needs a name");
      std::string name = head[1];
      if (doc.find_group(name)) fail(line0, "duplicate group '" + name + "'");
      GroupSpecDoc::NamedGroup ng;
      ng.name = name;
      int body_line = next_meaningful();
      if (body_line < 0) fail(line0, "unterminated GROUP block");
      std::vector<std::string> body = get_tokens(body_line);
      ++i;
      if (body[0] == "PERM") {
        if (body.size() != 2) fail(body_line + 1, "PERM needs a degree");
        int degree = std::stoi(body[1]);
        std::vector<Perm> gens;
        for (;;) {
          int ln = next_meaningful();
          if (ln < 0) fail(line0, "unterminated GROUP block");
          std::vector<std::string> t = get_tokens(ln);
          ++i;
          if (t[0] == "END") break;
          if (t[0] != "GEN") fail(ln + 1, "expected GEN or END");
          std::string rest = join_from(t, 1);
          try {
            gens.push_back(parse_cycles(rest, degree));
          } catch (const Error& e) {
            fail(ln + 1, e.what());
          }
        }
        ng.group = group_from_permutations(degree, gens, {}, name);
        ng.from_perms = true;
        ng.degree = degree;
      } else if (body[0] == "CAYLEY") {
        if (body.size() != 2) fail(body_line + 1, "CAYLEY needs an order");
        int n = std::stoi(body[1]);
        std::vector<int> mul;
        mul.reserve(static_cast<size_t>(n) * n);
        for (int r = 0; r < n; ++r) {
          int ln = next_meaningful();
          if (ln < 0) fail(line0, "unterminated GROUP block");
          std::vector<std::string> t = get_tokens(ln);
          ++i;
          if (t[0] != "ROW" || static_cast<int>(t.size()) != n + 1)
            fail(ln + 1, "expected ROW with " + std::to_string(n) + " entries");
          for (int c = 1; c <= n; ++c) mul.push_back(std::stoi(t[c]));
        }
        int ln = next_meaningful();
        if (ln < 0 || get_tokens(ln)[0] != "END") fail(line0, "CAYLEY block must end with END");
        ++i;
        try {
          ng.group = make_group(n, std::move(mul), name);
        } catch (const Error& e) {
          fail(line0, e.what());
        }
      } else if (body[0] == "PRESENTATION") {
        if (body.size() != 2) fail(body_line + 1, "PRESENTATION needs a generator count");
        int k = std::stoi(body[1]);
        std::vector<Word> rels;
        int max_cosets = 200000;
        for (;;) {
          int ln = next_meaningful();
          if (ln < 0) fail(line0, "unterminated GROUP block");
          std::vector<std::string> t = get_tokens(ln);
          ++i;
          if (t[0] == "END") break;
          if (t[0] == "MAXCOSETS" && t.size() == 2) {
            max_cosets = std::stoi(t[1]);
            continue;
          }
          if (t[0] != "REL") fail(ln + 1, "expected REL, MAXCOSETS or END");
          rels.push_back(parse_rel_word(join_from(t, 1), k, ln + 1));
        }
        try {
          Realization r = realize(make_presentation(k, rels, name), max_cosets);
          std::vector<int> gens = r.generator_images;
          auto g = std::const_pointer_cast<FiniteGroup>(r.group);
          g->generators = gens;  // presentation generators, for gK references
          ng.group = g;
        } catch (const Error& e) {
          fail(line0, e.what());
        }
      } else if (body[0] == "PRODUCT") {
        if (body.size() != 3) fail(body_line + 1, "PRODUCT needs two group names");
        const auto* a = doc.find_group(body[1]);
        const auto* b = doc.find_group(body[2]);
        if (!a || !b) fail(body_line + 1, "PRODUCT references an undeclared group");
        ng.group = direct_product(a->group, b->group, name);
        int ln = next_meaningful();
        if (ln < 0 || get_tokens(ln)[0] != "END") fail(line0, "PRODUCT block must end with END");
        ++i;
      } else {
        fail(body_line + 1, "expected PERM, CAYLEY, PRESENTATION or PRODUCT");
      }
      doc.groups.push_back(std::move(ng));
    } else if (head[0] == "HOM") {
      if (head.size() != 6 || head[2] != "FROM" || head[4] != "TO")
        fail(line0, "expected HOM <name> FROM <group> TO <group>");
      GroupSpecDoc::HomDecl hd;
      hd.name = head[1];
      hd.from = head[3];
      hd.to = head[5];
      if (doc.find_hom(hd.name)) fail(line0, "duplicate hom '" + hd.name + "'");
      const auto* src = doc.find_group(hd.from);
      const auto* dst = doc.find_group(hd.to);
      if (!src) fail(line0, "undeclared source group '" + hd.from + "'");
      if (!dst) fail(line0, "undeclared target group '" + hd.to + "'");
      std::vector<int> gens = generating_set(src->group);
      std::vector<int> images(gens.size(), -1);
      for (;;) {
        int ln = next_meaningful();
        if (ln < 0) fail(line0, "unterminated HOM block");
        std::vector<std::string> t = get_tokens(ln);
        ++i;
        if (t[0] == "END") break;
        if (t[0] != "MAP" || t.size() < 4 || t[2] != "->")
          fail(ln + 1, "expected MAP <gen> -> <element>");
        int gi = gen_name_to_index(t[1], static_cast<int>(gens.size()), ln + 1);
        images[gi] = parse_element(join_from(t, 3), *dst, ln + 1);
      }
      for (size_t k = 0; k < gens.size(); ++k)
        if (images[k] < 0)
          fail(line0, "generator g" + std::to_string(k + 1) + " of " + hd.from + " has no MAP");
      // order compatibility first for a sharper message, then the full check
      for (size_t k = 0; k < gens.size(); ++k) {
        int so = element_order(*src->group, gens[k]);
        int to = element_order(*dst->group, images[k]);
        if (so % to != 0)
          fail(line0, "image of g" + std::to_string(k + 1) + " has order " + std::to_string(to) +
                          " which does not divide the generator order " + std::to_string(so));
      }
      try {
        hd.hom = hom_from_gen_images(src->group, dst->group, gens, images);
      } catch (const Error& e) {
        fail(line0, std::string("not a homomorphism: ") + e.what());
      }
      doc.homs.push_back(std::move(hd));
    } else {
      fail(line0, "expected GROUP or HOM, got '" + head[0] + "'");
    }
  }
  return doc;
}

std::string render_spec(const GroupSpecDoc& doc) {
  std::ostringstream os;
  for (const auto& ng : doc.groups) {
    os << "GROUP " << ng.name << "\n";
    const FiniteGroup& G = *ng.group;
    if (ng.from_perms && !G.perm_witness.empty()) {
      os << "PERM " << ng.degree << "\n";
      for (int g : G.generators) os << "GEN " << format_cycles(G.perm_witness[g]) << "\n";
    } else {
      os << "CAYLEY " << G.order << "\n";
      for (int a = 0; a < G.order; ++a) {
        os << "ROW";
        for (int b = 0; b < G.order; ++b) os << " " << G.op(a, b);
        os << "\n";
      }
    }
    os << "END\n\n";
  }
  for (const auto& hd : doc.homs) {
    os << "HOM " << hd.name << " FROM " << hd.from << " TO " << hd.to << "\n";
    std::vector<int> gens = generating_set(hd.hom.source);
    for (size_t k = 0; k < gens.size(); ++k)
      os << "MAP g" << k + 1 << " -> " << hd.hom(gens[k]) << "\n";
    os << "END\n\n";
  }
  return os.str();
}

}  // namespace gnorm
