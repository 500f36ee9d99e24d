#include "torsionlab/document.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Split on a separator character at bracket depth zero ('[' … ']').  An
// all-whitespace input yields no pieces; empty pieces between separators are
// kept (they surface as literal errors downstream).
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (trim(s).empty()) return out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_spaces(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_size(const std::string& text, int line) {
    if (text.empty()) throw parse_error("expected a number", line);
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("bad number '" + text + "'", line);
    return static_cast<std::size_t>(std::strtoull(text.c_str(), nullptr, 10));
}

std::vector<std::size_t> parse_size_list(const std::string& text, int line) {
    std::vector<std::size_t> out;
    for (const std::string& tok : split_spaces(text)) out.push_back(parse_size(tok, line));
    return out;
}

long parse_long(const std::string& text, int line) {
    if (text.empty()) throw parse_error("expected an integer", line);
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) throw parse_error("bad integer '" + text + "'", line);
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("bad integer '" + text + "'", line);
    return std::strtol(text.c_str(), nullptr, 10);
}

// Strip the generic prefix so wrapping with a line number reads cleanly.
std::string strip_prefix(const std::string& what) {
    const std::string p = "parse error: ";
    if (what.rfind(p, 0) == 0) return what.substr(p.size());
    return what;
}

/* ---- raw line structure ------------------------------------------------ */

struct Entry {
    int line = 0;
    std::string key, value;
    bool used = false;
};

struct Section {
    int line = 0;
    std::string name;
    std::vector<Entry> entries;
};

std::vector<Section> split_sections(const std::string& text) {
    std::vector<Section> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        if (!header_seen) {
            if (s != "torsionlab-v1")
                throw parse_error("missing 'torsionlab-v1' header", line);
            header_seen = true;
            continue;
        }
        if (s.front() == '[' && s.back() == ']') {
            Section sec;
            sec.line = line;
            sec.name = trim(s.substr(1, s.size() - 2));
            if (sec.name.empty()) throw parse_error("empty section name", line);
            out.push_back(std::move(sec));
            continue;
        }
        if (out.empty()) throw parse_error("content before the first section", line);
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", line);
        Entry e;
        e.line = line;
        e.key = trim(s.substr(0, eq));
        e.value = trim(s.substr(eq + 1));
        if (e.key.empty()) throw parse_error("empty key", line);
        out.back().entries.push_back(std::move(e));
    }
    if (!header_seen) throw parse_error("missing 'torsionlab-v1' header", line);
    return out;
}

Entry* find_unique(Section& sec, const std::string& key, bool required) {
    Entry* found = nullptr;
    for (Entry& e : sec.entries) {
        if (e.key != key) continue;
        if (found) throw parse_error("duplicate key '" + key + "'", e.line);
        found = &e;
    }
    if (!found && required)
        throw parse_error("missing key '" + key + "' in [" + sec.name + "]", sec.line);
    if (found) found->used = true;
    return found;
}

std::vector<Entry*> find_all(Section& sec, const std::string& key) {
    std::vector<Entry*> out;
    for (Entry& e : sec.entries)
        if (e.key == key) {
            e.used = true;
            out.push_back(&e);
        }
    return out;
}

void reject_unused(const Section& sec) {
    for (const Entry& e : sec.entries)
        if (!e.used)
            throw parse_error("unknown key '" + e.key + "' in [" + sec.name + "]", e.line);
}

/* ---- literal helpers --------------------------------------------------- */

struct RawMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::string> entries; // row-major, rows*cols pieces
};

RawMatrix parse_raw_matrix(const std::string& text, int line) {
    std::size_t brace = text.find('{');
    std::string shape = trim(brace == std::string::npos ? text : text.substr(0, brace));
    std::size_t x = shape.find('x');
    if (x == std::string::npos)
        throw parse_error("matrix literal needs a 'RxC' shape prefix", line);
    RawMatrix m;
    m.rows = parse_size(trim(shape.substr(0, x)), line);
    m.cols = parse_size(trim(shape.substr(x + 1)), line);
    std::string body;
    if (brace != std::string::npos) {
        if (text.back() != '}') throw parse_error("matrix literal missing '}'", line);
        body = text.substr(brace + 1, text.size() - brace - 2);
    }
    std::vector<std::string> rows = split_top(body, ';');
    if (m.rows * m.cols == 0) {
        if (!rows.empty()) throw parse_error("entries in an empty matrix", line);
        return m;
    }
    if (rows.size() != m.rows)
        throw parse_error("matrix body has " + std::to_string(rows.size()) + " rows, shape says " +
                              std::to_string(m.rows),
                          line);
    for (const std::string& row : rows) {
        std::vector<std::string> cells = split_top(row, ',');
        if (cells.size() != m.cols)
            throw parse_error("matrix row has " + std::to_string(cells.size()) +
                                  " entries, shape says " + std::to_string(m.cols),
                              line);
        for (std::string& c : cells) m.entries.push_back(std::move(c));
    }
    return m;
}

ExactMatrix parse_matrix_at(const FieldDescriptor& d, const std::string& text, int line) {
    RawMatrix raw = parse_raw_matrix(text, line);
    ExactMatrix m(d, raw.rows, raw.cols);
    for (std::size_t i = 0; i < raw.rows; ++i)
        for (std::size_t j = 0; j < raw.cols; ++j) {
            try {
                m.at(i, j) = FieldElement::parse(d, raw.entries[i * raw.cols + j]);
            } catch (const parse_error& e) {
                throw parse_error(strip_prefix(e.what()), line);
            }
        }
    return m;
}

void check_shape(const ExactMatrix& m, std::size_t rows, std::size_t cols,
                 const std::string& what, int line) {
    if (m.rows() != rows || m.cols() != cols)
        throw parse_error(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()),
                          line);
}

Word parse_word_at(const std::string& text, const GroupPresentation& g, int line) {
    try {
        return parse_word(text, g);
    } catch (const std::runtime_error& e) {
        throw parse_error(strip_prefix(e.what()), line);
    }
}

// A parenthesized word list "(a b) () (g^-1)"; words never contain parens.
std::vector<Word> parse_word_list(const std::string& text, const GroupPresentation& g, int line) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw parse_error("expected '(' in word list", line);
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw parse_error("unbalanced '(' in word list", line);
        out.push_back(parse_word_at(text.substr(i + 1, close - i - 1), g, line));
        i = close + 1;
    }
    return out;
}

std::string word_list_str(const std::vector<Word>& words, const GroupPresentation& g) {
    std::string s;
    for (const Word& w : words) {
        if (!s.empty()) s += " ";
        s += "(" + word_str(w, g) + ")";
    }
    return s;
}

GroupRingElement parse_ring_element_at(const std::string& text, const GroupPresentation& g,
                                       int line) {
    std::string s = trim(text);
    if (s == "0") return {};
    std::vector<std::pair<long, Word>> terms;
    std::size_t pos = 0;
    while (pos != std::string::npos) {
        std::size_t next = s.find(" + ", pos);
        std::string term = trim(s.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? next : next + 3;
        std::size_t star = term.find("*(");
        if (star == std::string::npos || term.empty() || term.back() != ')')
            throw parse_error("bad ring term '" + term + "' (want c*(WORD))", line);
        long coef = parse_long(trim(term.substr(0, star)), line);
        Word w = parse_word_at(term.substr(star + 2, term.size() - star - 3), g, line);
        terms.emplace_back(coef, std::move(w));
    }
    return GroupRingElement::from_terms(std::move(terms));
}

RingMatrix parse_ring_matrix_at(const std::string& text, const GroupPresentation& g, int line) {
    RawMatrix raw = parse_raw_matrix(text, line);
    RingMatrix m(raw.rows, raw.cols);
    for (std::size_t i = 0; i < raw.rows; ++i)
        for (std::size_t j = 0; j < raw.cols; ++j)
            m.at(i, j) = parse_ring_element_at(raw.entries[i * raw.cols + j], g, line);
    return m;
}

/* ---- section interpreters ---------------------------------------------- */

FieldDescriptor read_field(Section& sec) {
    Entry* base = find_unique(sec, "base", true);
    Entry* var = find_unique(sec, "variable", false);
    reject_unused(sec);
    try {
        return parse_field_descriptor(base->value, var ? var->value : "");
    } catch (const parse_error& e) {
        throw parse_error(strip_prefix(e.what()), base->line);
    }
}

GroupPresentation read_group(Section& sec) {
    GroupPresentation g;
    Entry* gens = find_unique(sec, "generators", true);
    g.generators = split_spaces(gens->value);
    for (Entry* e : find_all(sec, "relation"))
        g.relations.push_back(parse_word_at(e->value, g, e->line));
    reject_unused(sec);
    try {
        g.validate();
    } catch (const std::runtime_error& e) {
        throw parse_error(strip_prefix(e.what()), sec.line);
    }
    return g;
}

Representation read_representation(Section& sec, const FieldDescriptor& d,
                                   const GroupPresentation& g) {
    Representation r;
    r.presentation = g;
    std::size_t dim = parse_size(find_unique(sec, "dim", true)->value, sec.line);
    for (const std::string& name : g.generators) {
        Entry* e = find_unique(sec, "image " + name, true);
        ExactMatrix m = parse_matrix_at(d, e->value, e->line);
        check_shape(m, dim, dim, "image " + name, e->line);
        r.images.push_back(std::move(m));
    }
    reject_unused(sec);
    return r;
}

CochainComplex read_complex_body(Section& sec, const FieldDescriptor& d,
                                 const std::string& dims_key, const std::string& diff_prefix) {
    CochainComplex c;
    c.field = d;
    Entry* dims = find_unique(sec, dims_key, true);
    c.dims = parse_size_list(dims->value, dims->line);
    if (c.dims.empty()) throw parse_error("'" + dims_key + "' needs at least one degree", dims->line);
    for (std::size_t q = 0; q + 1 < c.dims.size(); ++q) {
        Entry* e = find_unique(sec, diff_prefix + " " + std::to_string(q), true);
        ExactMatrix m = parse_matrix_at(d, e->value, e->line);
        check_shape(m, c.dims[q + 1], c.dims[q], e->key, e->line);
        c.diffs.push_back(std::move(m));
    }
    return c;
}

CochainComplex read_complex(Section& sec, const FieldDescriptor& d) {
    CochainComplex c = read_complex_body(sec, d, "dims", "diff");
    reject_unused(sec);
    return c;
}

EquivariantCellComplex read_cellcomplex(Section& sec, const GroupPresentation& g) {
    EquivariantCellComplex x;
    x.group = g;
    Entry* cells = find_unique(sec, "cells", true);
    x.cells = parse_size_list(cells->value, cells->line);
    if (x.cells.empty()) throw parse_error("'cells' needs at least one degree", cells->line);
    const std::size_t n = x.cells.size() - 1;
    for (std::size_t q = 0; q < n; ++q) {
        Entry* e = find_unique(sec, "boundary " + std::to_string(q), true);
        RingMatrix m = parse_ring_matrix_at(e->value, g, e->line);
        if (m.n_rows != x.cells[q] || m.n_cols != x.cells[q + 1])
            throw parse_error(e->key + " must be " + std::to_string(x.cells[q]) + "x" +
                                  std::to_string(x.cells[q + 1]),
                              e->line);
        x.boundaries.push_back(std::move(m));
    }
    for (std::size_t q = 0; q <= n; ++q) {
        Entry* e = find_unique(sec, "lifts " + std::to_string(q), true);
        std::vector<Word> lifts = parse_word_list(e->value, g, e->line);
        if (lifts.size() != x.cells[q])
            throw parse_error(e->key + " needs " + std::to_string(x.cells[q]) + " words", e->line);
        x.lifts.push_back(std::move(lifts));
    }
    if (Entry* e = find_unique(sec, "ordering", false)) {
        x.ordering = parse_size_list(e->value, e->line);
        if (x.ordering.size() != x.total_cells())
            throw parse_error("'ordering' needs one position per cell", e->line);
    }
    std::vector<Entry*> name_rows;
    for (std::size_t q = 0; q <= n; ++q)
        if (Entry* e = find_unique(sec, "names " + std::to_string(q), false)) name_rows.push_back(e);
    if (!name_rows.empty()) {
        if (name_rows.size() != n + 1)
            throw parse_error("'names' lines must cover every degree", name_rows.back()->line);
        for (std::size_t q = 0; q <= n; ++q) {
            std::vector<std::string> names = split_spaces(name_rows[q]->value);
            if (names.size() != x.cells[q])
                throw parse_error("names " + std::to_string(q) + " needs " +
                                      std::to_string(x.cells[q]) + " entries",
                                  name_rows[q]->line);
            x.names.push_back(std::move(names));
        }
    }
    reject_unused(sec);
    return x;
}

// "basis PREFIXq = matrix" lines: all-or-none per prefix, q = 0..degrees-1,
// rows pinned by the ambient dimensions.
std::optional<GradedBases> read_bases(Section& sec, const FieldDescriptor& d,
                                      const std::string& prefix,
                                      const std::vector<std::size_t>& ambient_dims) {
    std::vector<Entry*> rows;
    for (std::size_t q = 0; q < ambient_dims.size(); ++q)
        if (Entry* e = find_unique(sec, prefix + std::to_string(q), false)) rows.push_back(e);
    if (rows.empty()) return std::nullopt;
    if (rows.size() != ambient_dims.size())
        throw parse_error("'" + prefix + "Q' lines must cover every degree", rows.back()->line);
    GradedBases h;
    for (std::size_t q = 0; q < ambient_dims.size(); ++q) {
        ExactMatrix m = parse_matrix_at(d, rows[q]->value, rows[q]->line);
        if (m.rows() != ambient_dims[q])
            throw parse_error(rows[q]->key + " needs " + std::to_string(ambient_dims[q]) +
                                  " rows",
                              rows[q]->line);
        h.reps.push_back(std::move(m));
    }
    return h;
}

SequencePayload read_sequence(Section& sec, const FieldDescriptor& d) {
    SequencePayload p;
    p.ses.c0 = read_complex_body(sec, d, "dims c0", "diff c0");
    p.ses.c1 = read_complex_body(sec, d, "dims c1", "diff c1");
    p.ses.c2 = read_complex_body(sec, d, "dims c2", "diff c2");
    if (p.ses.c0.dims.size() != p.ses.c1.dims.size() ||
        p.ses.c1.dims.size() != p.ses.c2.dims.size())
        throw parse_error("the three complexes must list the same degrees", sec.line);
    for (std::size_t q = 0; q < p.ses.c1.dims.size(); ++q) {
        Entry* in = find_unique(sec, "inject " + std::to_string(q), true);
        ExactMatrix mi = parse_matrix_at(d, in->value, in->line);
        check_shape(mi, p.ses.c1.dims[q], p.ses.c0.dims[q], in->key, in->line);
        p.ses.inject.push_back(std::move(mi));
        Entry* pr = find_unique(sec, "project " + std::to_string(q), true);
        ExactMatrix mp = parse_matrix_at(d, pr->value, pr->line);
        check_shape(mp, p.ses.c2.dims[q], p.ses.c1.dims[q], pr->key, pr->line);
        p.ses.project.push_back(std::move(mp));
    }
    p.h0 = read_bases(sec, d, "basis c0 ", p.ses.c0.dims);
    p.h2 = read_bases(sec, d, "basis c2 ", p.ses.c2.dims);
    reject_unused(sec);
    return p;
}

MappingTorusPayload read_mappingtorus(Section& sec, const FieldDescriptor& d) {
    MappingTorusPayload p;
    p.map.domain = read_complex_body(sec, d, "dims", "diff");
    for (std::size_t q = 0; q < p.map.domain.dims.size(); ++q) {
        Entry* e = find_unique(sec, "comap " + std::to_string(q), true);
        ExactMatrix m = parse_matrix_at(d, e->value, e->line);
        check_shape(m, p.map.domain.dims[q], p.map.domain.dims[q], e->key, e->line);
        p.map.comap.push_back(std::move(m));
    }
    Entry* w = find_unique(sec, "monodromy", true);
    p.monodromy.w = parse_matrix_at(d, w->value, w->line);
    if (!p.monodromy.w.is_square())
        throw parse_error("'monodromy' must be square", w->line);
    reject_unused(sec);
    return p;
}

CohomologyOrientation read_orientation(Section& sec,
                                       const std::vector<std::size_t>* untwisted_dims) {
    CohomologyOrientation o;
    Entry* sign = find_unique(sec, "sign", true);
    if (sign->value == "1")
        o.sign = 1;
    else if (sign->value == "-1")
        o.sign = -1;
    else
        throw parse_error("'sign' must be 1 or -1", sign->line);
    if (untwisted_dims) {
        // orientation bases orient untwisted rational cohomology, so their
        // entries are plain rationals whatever the job field is
        const FieldDescriptor rationals{BaseField::rationals, ""};
        if (auto bases = read_bases(sec, rationals, "basis ", *untwisted_dims)) o.bases = *bases;
    }
    reject_unused(sec);
    return o;
}

/* ---- serialization ----------------------------------------------------- */

void emit(std::string& out, const std::string& key, const std::string& value) {
    out += key + " =" + (value.empty() ? "" : " " + value) + "\n";
}

std::string size_list_str(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t x : v) {
        if (!s.empty()) s += " ";
        s += std::to_string(x);
    }
    return s;
}

void emit_complex_body(std::string& out, const CochainComplex& c, const std::string& dims_key,
                       const std::string& diff_prefix) {
    emit(out, dims_key, size_list_str(c.dims));
    for (std::size_t q = 0; q < c.diffs.size(); ++q)
        emit(out, diff_prefix + " " + std::to_string(q), matrix_str(c.diffs[q]));
}

} // namespace

std::string matrix_str(const ExactMatrix& m) {
    std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " {";
    if (m.rows() * m.cols() == 0) return s + "}";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += m.at(i, j).str();
        }
    }
    return s + "}";
}

ExactMatrix parse_matrix(const FieldDescriptor& d, const std::string& text) {
    return parse_matrix_at(d, text, -1);
}

std::string ring_element_str(const GroupRingElement& e, const GroupPresentation& g) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [coef, w] : e.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(coef) + "*(" + word_str(w, g) + ")";
    }
    return s;
}

GroupRingElement parse_ring_element(const std::string& text, const GroupPresentation& g) {
    return parse_ring_element_at(text, g, -1);
}

std::string ring_matrix_str(const RingMatrix& m, const GroupPresentation& g) {
    std::string s = std::to_string(m.n_rows) + "x" + std::to_string(m.n_cols) + " {";
    if (m.n_rows * m.n_cols == 0) return s + "}";
    for (std::size_t i = 0; i < m.n_rows; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.n_cols; ++j) {
            if (j) s += ", ";
            s += ring_element_str(m.at(i, j), g);
        }
    }
    return s + "}";
}

RingMatrix parse_ring_matrix(const std::string& text, const GroupPresentation& g) {
    return parse_ring_matrix_at(text, g, -1);
}

JobDocument parse_document(const std::string& text) {
    std::vector<Section> sections = split_sections(text);

    // canonical section order; each present at most once
    const std::map<std::string, int> order = {
        {"field", 0},       {"group", 1},    {"representation", 2}, {"complex", 3},
        {"cellcomplex", 3}, {"sequence", 3}, {"mappingtorus", 3},   {"orientation", 4},
        {"hbases", 5}};
    int last = -1;
    for (const Section& sec : sections) {
        auto it = order.find(sec.name);
        if (it == order.end()) throw parse_error("unknown section [" + sec.name + "]", sec.line);
        if (it->second <= last)
            throw parse_error("section [" + sec.name + "] is out of order or repeated", sec.line);
        last = it->second;
    }

    JobDocument doc;
    bool have_field = false, have_payload = false;
    for (Section& sec : sections) {
        if (sec.name == "field") {
            doc.field = read_field(sec);
            have_field = true;
            continue;
        }
        if (!have_field) throw parse_error("[field] must come first", sec.line);
        if (sec.name == "group") {
            doc.group = read_group(sec);
        } else if (sec.name == "representation") {
            if (!doc.group) throw parse_error("[representation] needs a [group]", sec.line);
            doc.representation = read_representation(sec, doc.field, *doc.group);
        } else if (sec.name == "complex") {
            doc.payload = PayloadKind::complex_block;
            doc.complex = read_complex(sec, doc.field);
            have_payload = true;
        } else if (sec.name == "cellcomplex") {
            if (!doc.group) throw parse_error("[cellcomplex] needs a [group]", sec.line);
            doc.payload = PayloadKind::cellcomplex_block;
            doc.cellcomplex = read_cellcomplex(sec, *doc.group);
            have_payload = true;
        } else if (sec.name == "sequence") {
            doc.payload = PayloadKind::sequence_block;
            doc.sequence = read_sequence(sec, doc.field);
            have_payload = true;
        } else if (sec.name == "mappingtorus") {
            doc.payload = PayloadKind::mappingtorus_block;
            doc.mappingtorus = read_mappingtorus(sec, doc.field);
            have_payload = true;
        } else if (sec.name == "orientation") {
            if (!have_payload || (doc.payload != PayloadKind::cellcomplex_block &&
                                  doc.payload != PayloadKind::mappingtorus_block))
                throw parse_error("[orientation] needs a cellcomplex or mappingtorus payload",
                                  sec.line);
            const std::vector<std::size_t>* dims =
                doc.payload == PayloadKind::cellcomplex_block ? &doc.cellcomplex.cells : nullptr;
            doc.orientation = read_orientation(sec, dims);
        } else if (sec.name == "hbases") {
            if (!have_payload || doc.payload != PayloadKind::complex_block)
                throw parse_error("[hbases] needs a [complex] payload", sec.line);
            doc.hbases = read_bases(sec, doc.field, "basis ", doc.complex.dims);
            if (!doc.hbases) throw parse_error("[hbases] needs 'basis Q' lines", sec.line);
        }
    }
    if (!have_field) throw parse_error("missing [field] section");
    if (!have_payload) throw parse_error("missing payload section");
    return doc;
}

std::string serialize_document(const JobDocument& doc) {
    std::string out = "torsionlab-v1\n";

    out += "\n[field]\n";
    emit(out, "base",
         doc.field.base == BaseField::rationals ? "rationals" : "gaussian-rationals");
    if (doc.field.has_variable()) emit(out, "variable", doc.field.variable);

    if (doc.group) {
        out += "\n[group]\n";
        std::string gens;
        for (const std::string& g : doc.group->generators) {
            if (!gens.empty()) gens += " ";
            gens += g;
        }
        emit(out, "generators", gens);
        for (const Word& r : doc.group->relations) emit(out, "relation", word_str(r, *doc.group));
    }

    if (doc.representation) {
        out += "\n[representation]\n";
        emit(out, "dim", std::to_string(doc.representation->dim()));
        for (std::size_t i = 0; i < doc.representation->presentation.generators.size(); ++i)
            emit(out, "image " + doc.representation->presentation.generators[i],
                 matrix_str(doc.representation->images[i]));
    }

    switch (doc.payload) {
        case PayloadKind::complex_block: {
            out += "\n[complex]\n";
            emit_complex_body(out, doc.complex, "dims", "diff");
            break;
        }
        case PayloadKind::cellcomplex_block: {
            const EquivariantCellComplex& x = doc.cellcomplex;
            out += "\n[cellcomplex]\n";
            emit(out, "cells", size_list_str(x.cells));
            for (std::size_t q = 0; q < x.boundaries.size(); ++q)
                emit(out, "boundary " + std::to_string(q),
                     ring_matrix_str(x.boundaries[q], x.group));
            for (std::size_t q = 0; q < x.lifts.size(); ++q)
                emit(out, "lifts " + std::to_string(q), word_list_str(x.lifts[q], x.group));
            if (!x.ordering.empty()) emit(out, "ordering", size_list_str(x.ordering));
            for (std::size_t q = 0; q < x.names.size(); ++q) {
                std::string names;
                for (const std::string& n : x.names[q]) {
                    if (!names.empty()) names += " ";
                    names += n;
                }
                emit(out, "names " + std::to_string(q), names);
            }
            break;
        }
        case PayloadKind::sequence_block: {
            const SequencePayload& p = doc.sequence;
            out += "\n[sequence]\n";
            emit_complex_body(out, p.ses.c0, "dims c0", "diff c0");
            emit_complex_body(out, p.ses.c1, "dims c1", "diff c1");
            emit_complex_body(out, p.ses.c2, "dims c2", "diff c2");
            for (std::size_t q = 0; q < p.ses.inject.size(); ++q) {
                emit(out, "inject " + std::to_string(q), matrix_str(p.ses.inject[q]));
                emit(out, "project " + std::to_string(q), matrix_str(p.ses.project[q]));
            }
            if (p.h0)
                for (std::size_t q = 0; q < p.h0->reps.size(); ++q)
                    emit(out, "basis c0 " + std::to_string(q), matrix_str(p.h0->reps[q]));
            if (p.h2)
                for (std::size_t q = 0; q < p.h2->reps.size(); ++q)
                    emit(out, "basis c2 " + std::to_string(q), matrix_str(p.h2->reps[q]));
            break;
        }
        case PayloadKind::mappingtorus_block: {
            const MappingTorusPayload& p = doc.mappingtorus;
            out += "\n[mappingtorus]\n";
            emit_complex_body(out, p.map.domain, "dims", "diff");
            for (std::size_t q = 0; q < p.map.comap.size(); ++q)
                emit(out, "comap " + std::to_string(q), matrix_str(p.map.comap[q]));
            emit(out, "monodromy", matrix_str(p.monodromy.w));
            break;
        }
    }

    if (doc.orientation) {
        out += "\n[orientation]\n";
        emit(out, "sign", doc.orientation->sign < 0 ? "-1" : "1");
        for (std::size_t q = 0; q < doc.orientation->bases.reps.size(); ++q)
            emit(out, "basis " + std::to_string(q), matrix_str(doc.orientation->bases.reps[q]));
    }

    if (doc.hbases) {
        out += "\n[hbases]\n";
        for (std::size_t q = 0; q < doc.hbases->reps.size(); ++q)
            emit(out, "basis " + std::to_string(q), matrix_str(doc.hbases->reps[q]));
    }

    return out;
}

} // namespace torsionlab
