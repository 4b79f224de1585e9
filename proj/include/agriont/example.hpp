#ifndef AGRIONT_EXAMPLE_HPP
#define AGRIONT_EXAMPLE_HPP

#include "agriont/graph.hpp"
#include "agriont/vocab.hpp"

namespace agriont {

/// Bundled linked-data example: one field with its weather and soil
/// conditions, location, farmer, crop and product chain, on top of the
/// core schema. Property values are illustrative; the link structure is
/// what the competency queries exercise.
Graph buildExampleDataset(const Iri& namespaceIri = Iri(vocab::defaultNs));

}  // namespace agriont

#endif
