#pragma once

#include <optional>

#include "torsionlab/maptorus.hpp"

namespace torsionlab {

/* Self-contained job file.  Layout: a "torsionlab-v1" header line, then
 * labeled sections in this fixed order (each at most once):
 *
 *   [field]           base = rationals | gaussian-rationals; variable = NAME
 *   [group]           generators = a b; one "relation = WORD" line each
 *   [representation]  dim = N; one "image GEN = MATRIX" line per generator
 *   payload           exactly one of [complex] [cellcomplex] [sequence]
 *                     [mappingtorus]
 *   [orientation]     sign = 1 | -1; optional "basis Q = MATRIX" lines
 *   [hbases]          "basis Q = MATRIX" lines, one per degree
 *
 * Literals: rationals "p/q", gaussians "a+b*i", polynomials "[c0, c1, ...]",
 * ratios "[num]/[den]", words "g1 g2^-1" (space-separated, empty = identity).
 * A matrix is "RxC {row; row; ...}" with comma-separated entries; a group
 * ring entry is "0" or terms "c*(WORD)" joined by " + ".  '#' starts a
 * comment.  serialize_document emits the canonical form (fixed section and
 * key order, no comments); parsing it back is byte-identical. */

enum class PayloadKind { complex_block, cellcomplex_block, sequence_block, mappingtorus_block };

struct SequencePayload {
    ShortExactSequenceOfComplexes ses;
    std::optional<GradedBases> h0, h2; // cohomology bases for the fusion check
};

struct MappingTorusPayload {
    CellularSelfMap map;
    MonodromyRep monodromy;
};

struct JobDocument {
    FieldDescriptor field;
    std::optional<GroupPresentation> group;
    std::optional<Representation> representation;

    PayloadKind payload = PayloadKind::complex_block;
    CochainComplex complex;             // when payload == complex_block
    EquivariantCellComplex cellcomplex; // when payload == cellcomplex_block
    SequencePayload sequence;           // when payload == sequence_block
    MappingTorusPayload mappingtorus;   // when payload == mappingtorus_block

    std::optional<CohomologyOrientation> orientation;
    std::optional<GradedBases> hbases;
};

// Structural and shape errors throw parse_error carrying the 1-based line
// number; semantic checks (d o d = 0, relations, exactness) are left to the
// payload validate() calls.
JobDocument parse_document(const std::string& text);

std::string serialize_document(const JobDocument& doc);

/* The matrix literal "RxC {a, b; c, d}" used inside documents, also handy on
 * its own for reports and tests.  parse_matrix checks the declared shape
 * against the row/column lists. */
std::string matrix_str(const ExactMatrix& m);
ExactMatrix parse_matrix(const FieldDescriptor& d, const std::string& text);

std::string ring_matrix_str(const RingMatrix& m, const GroupPresentation& g);
RingMatrix parse_ring_matrix(const std::string& text, const GroupPresentation& g);

std::string ring_element_str(const GroupRingElement& e, const GroupPresentation& g);
GroupRingElement parse_ring_element(const std::string& text, const GroupPresentation& g);

} // namespace torsionlab
