#pragma once

#include <string>
#include <vector>

#include "dsf/datasheet.hpp"

namespace dsf {

struct RdfTerm {
  enum class Kind { Iri, Literal };
  Kind kind = Kind::Iri;
  std::string value;
  std::string datatype;  // set only for typed literals

  friend bool operator==(const RdfTerm&, const RdfTerm&) = default;
};

struct Triple {
  std::string subject;
  std::string predicate;
  RdfTerm object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// How a field expands into triples.
enum class TripleShape {
  Literal,              // one plain literal
  TypedLiteral,         // one literal with an xsd datatype
  TokenLiteral,         // one plain literal holding a vocabulary token
  LiteralList,          // one plain literal per entry
  Entity,               // child node with type and label
  EntityList,           // child node with type and label per entry
  FractionDistribution, // distribution node with one bucket node per share
  BiasLikelihoods,      // assertion node per category/likelihood pair
};

struct FieldMapping {
  std::string path;
  std::string predicate;     // full IRI; "{base}" marks the artifact namespace
  TripleShape shape;
  std::string datatype;      // xsd IRI for TypedLiteral
  std::string entity_class;  // class IRI for Entity and EntityList
};

// One row per registry field, in registry order.
const std::vector<FieldMapping>& rdf_mapping();

// Expands the populated fields into triples rooted at base_iri. The root
// receives a dcat:Dataset type triple; child nodes hang off base_iri with
// fragment identifiers derived from the field path. A populated but empty
// list or map yields a single triple recording that the field was
// deliberately documented as empty. base_iri must carry a URI scheme and no
// fragment; anything else raises std::invalid_argument.
std::vector<Triple> export_rdf(const Datasheet& ds, const std::string& base_iri);

// Canonical N-Triples text: one line per triple, sorted, trailing newline.
std::string to_ntriples(const std::vector<Triple>& triples);

std::string export_ntriples(const Datasheet& ds, const std::string& base_iri);

}  // namespace dsf
