#pragma once

#include <string>
#include <vector>

#include "gnorm/group.hpp"

namespace gnorm {

/// A parsed group/homomorphism document.  Line-oriented format:
///
///   GROUP <name>            HOM <name> FROM <src> TO <dst>
///   PERM <degree>           MAP <gen> -> <element>
///   GEN <cycles>            END
///   END
///
/// Group bodies are one of PERM/GEN, CAYLEY/ROW, PRESENTATION/REL
/// (realized by coset enumeration), or PRODUCT <a> <b>.  Cycles are 1-based,
/// "()" is the identity.  Generators are named g1..gk ("g" = g1); MAP images
/// are cycles for permutation targets, a bare element index for any target,
/// or gK for a target generator, combined with "*".
struct GroupSpecDoc {
  struct NamedGroup {
    std::string name;
    GroupPtr group;
    bool from_perms = false;  // rendered back as PERM/GEN when possible
    int degree = 0;
  };
  struct HomDecl {
    std::string name;
    std::string from, to;
    GroupHom hom;
  };

  std::vector<NamedGroup> groups;
  std::vector<HomDecl> homs;

  const NamedGroup* find_group(const std::string& name) const;
  const HomDecl* find_hom(const std::string& name) const;
};

/// Parses and validates a document; errors carry 1-based line numbers.
GroupSpecDoc parse_spec(const std::string& text);

/// Renders a document back to the line format; parse(render(doc)) yields the
/// same groups and homomorphisms.
std::string render_spec(const GroupSpecDoc& doc);

Perm parse_cycles(const std::string& s, int degree);
std::string format_cycles(const Perm& p);

}  // namespace gnorm
