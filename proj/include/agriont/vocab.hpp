#ifndef AGRIONT_VOCAB_HPP
#define AGRIONT_VOCAB_HPP

#include <string>

#include "agriont/term.hpp"

namespace agriont::vocab {

inline const std::string rdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owlNs = "http://www.w3.org/2002/07/owl#";

inline const Iri rdfType{rdfNs + "type"};
inline const Iri rdfsSubClassOf{rdfsNs + "subClassOf"};
inline const Iri rdfsSubPropertyOf{rdfsNs + "subPropertyOf"};
inline const Iri rdfsDomain{rdfsNs + "domain"};
inline const Iri rdfsRange{rdfsNs + "range"};
inline const Iri rdfsLabel{rdfsNs + "label"};
inline const Iri rdfsComment{rdfsNs + "comment"};
inline const Iri owlClass{owlNs + "Class"};
inline const Iri owlObjectProperty{owlNs + "ObjectProperty"};
inline const Iri owlDatatypeProperty{owlNs + "DatatypeProperty"};
inline const Iri owlNamedIndividual{owlNs + "NamedIndividual"};
inline const Iri owlInverseOf{owlNs + "inverseOf"};

/// Default ontology namespace, exposed as the `agriont:` prefix;
/// the base is configurable through the CLI's --base-iri.
inline const std::string defaultNs = "http://www.agriont.org/ontology#";

}  // namespace agriont::vocab

#endif
