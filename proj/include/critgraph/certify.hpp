#pragma once

// Certifying 4-colourability for (P6,bull)-free graphs backed by a
// catalog of 5-vertex-critical (P6,bull)-free graphs: the positive
// certificate is a proper 4-colouring, the negative one an induced
// embedding of a catalog member. A non-4-colourable input none of whose
// catalog members embed raises incomplete_catalog - that outcome
// falsifies the supplied catalog rather than the input.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critgraph/canon.hpp"
#include "critgraph/colour.hpp"
#include "critgraph/critical.hpp"
#include "critgraph/detect.hpp"
#include "critgraph/graph6.hpp"

namespace critgraph {

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::string form;
};

class CatalogError : public std::runtime_error {
public:
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

class IncompleteCatalogError : public std::runtime_error {
public:
    explicit IncompleteCatalogError(const std::string& what) : std::runtime_error(what) {}
};

class NotFamilyFreeError : public std::runtime_error {
public:
    explicit NotFamilyFreeError(const std::string& what) : std::runtime_error(what) {}
};

class Catalog {
public:
    // Lines of `name<TAB>canonical-graph6`. Loading re-verifies the
    // invariants: members are k-vertex-critical and family-free, lines
    // carry the canonical form, and no two members are isomorphic.
    static Catalog load(std::istream& in, int k, const PatternFamily& family, bool verify_members = true) {
        Catalog cat;
        cat.k_ = k;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            const auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw CatalogError("catalog line " + std::to_string(lineno) + ": expected name<TAB>graph6");
            CatalogEntry e;
            e.name = line.substr(0, tab);
            e.graph = decode_graph6(line.substr(tab + 1));
            e.form = canonical_form(e.graph);
            if (e.form != line.substr(tab + 1))
                throw CatalogError("catalog entry " + e.name + ": graph6 is not the canonical form");
            cat.entries_.push_back(std::move(e));
        }
        cat.finish(family, verify_members);
        return cat;
    }

    static Catalog load_file(const std::string& path, int k, const PatternFamily& family,
                             bool verify_members = true) {
        std::ifstream in(path);
        if (!in) throw CatalogError("catalog: cannot open " + path);
        return load(in, k, family, verify_members);
    }

    static Catalog from_graphs(const std::vector<Graph>& graphs, int k, const PatternFamily& family,
                               bool verify_members = true) {
        Catalog cat;
        cat.k_ = k;
        int idx = 0;
        for (const Graph& g : graphs) {
            CatalogEntry e;
            e.graph = g;
            e.form = canonical_form(g);
            std::ostringstream name;
            name << "g" << ++idx;
            e.name = name.str();
            cat.entries_.push_back(std::move(e));
        }
        cat.finish(family, verify_members);
        return cat;
    }

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    int k() const { return k_; }
    bool empty() const { return entries_.empty(); }

    const CatalogEntry* by_name(const std::string& name) const {
        const auto it = index_.find(name);
        return it == index_.end() ? nullptr : &entries_[it->second];
    }

    std::string serialize() const {
        std::ostringstream out;
        for (const CatalogEntry& e : entries_) out << e.name << '\t' << e.form << '\n';
        return out.str();
    }

private:
    void finish(const PatternFamily& family, bool verify_members) {
        std::map<std::string, std::string> forms;
        for (const CatalogEntry& e : entries_) {
            const auto prev = forms.find(e.form);
            if (prev != forms.end())
                throw CatalogError("catalog entries " + prev->second + " and " + e.name + " are isomorphic");
            forms.emplace(e.form, e.name);
            if (verify_members) {
                if (!is_family_free(e.graph, family))
                    throw CatalogError("catalog entry " + e.name + " is not family-free");
                if (!is_vertex_critical_quick(e.graph, k_))
                    throw CatalogError("catalog entry " + e.name + " is not " + std::to_string(k_) +
                                       "-vertex-critical");
            }
        }
        // Smallest witnesses first.
        std::stable_sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
            if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
            return a.name < b.name;
        });
        index_.clear();
        for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].name] = i;
    }

    int k_ = 5;
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

struct Certificate {
    enum class Verdict { four_colourable, not_four_colourable };
    Verdict verdict = Verdict::four_colourable;
    std::optional<Colouring> colouring;                      // positive payload
    std::optional<std::pair<std::string, Embedding>> witness;  // negative payload
};

inline Certificate certify_4colourable(const Graph& g, const Catalog& cat, const PatternFamily& family) {
    if (!is_family_free(g, family)) throw NotFamilyFreeError("certify: input is not family-free");
    if (cat.empty()) throw CatalogError("certify: empty catalog");
    if (auto col = k_colourable(g, 4)) {
        Certificate c;
        c.verdict = Certificate::Verdict::four_colourable;
        col->k = 4;
        c.colouring = *col;
        return c;
    }
    for (const CatalogEntry& e : cat.entries()) {
        if (e.graph.order() > g.order()) continue;
        if (auto emb = find_induced(g, e.graph)) {
            Certificate c;
            c.verdict = Certificate::Verdict::not_four_colourable;
            c.witness = std::make_pair(e.name, *emb);
            return c;
        }
    }
    throw IncompleteCatalogError("certify: input is not 4-colourable but no catalog member embeds");
}

// Definitional re-check of a certificate: a proper total 4-colouring, or
// a valid induced embedding of a catalog member whose criticality is
// itself re-verified. Any mismatch yields false.
inline bool verify_certificate(const Graph& g, const Certificate& cert, const Catalog& cat) {
    if (cert.verdict == Certificate::Verdict::four_colourable) {
        if (!cert.colouring) return false;
        Colouring c = *cert.colouring;
        if (c.k > 4) return false;
        c.k = 4;
        return is_proper(g, c);
    }
    if (!cert.witness) return false;
    const CatalogEntry* e = cat.by_name(cert.witness->first);
    if (e == nullptr) return false;
    if (!verify_embedding(g, e->graph, cert.witness->second)) return false;
    return is_vertex_critical_quick(e->graph, 5);
}

namespace detail {

inline std::uint32_t crc32(const std::string& data) {
    std::uint32_t crc = 0xFFFFFFFFu;
    for (unsigned char byte : data) {
        crc ^= byte;
        for (int i = 0; i < 8; ++i) crc = (crc >> 1) ^ (0xEDB88320u & (0u - (crc & 1u)));
    }
    return crc ^ 0xFFFFFFFFu;
}

}  // namespace detail

// Text form, integrity-checked: the header carries a crc32 of the body so
// any corruption is rejected at parse time.
//   critcert 1 crc32=XXXXXXXX
//   verdict four_colourable          | verdict not_four_colourable
//   colour <v>:<c> ...               | witness <name> + map <p>-><h> ...
inline std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream body;
    if (cert.verdict == Certificate::Verdict::four_colourable) {
        body << "verdict four_colourable\n";
        const Colouring& c = *cert.colouring;
        for (std::size_t v = 0; v < c.colour.size(); ++v) body << "colour " << v << ':' << c.colour[v] << '\n';
    } else {
        body << "verdict not_four_colourable\n";
        body << "witness " << cert.witness->first << '\n';
        const Embedding& e = cert.witness->second;
        for (std::size_t p = 0; p < e.map.size(); ++p) body << "map " << p << "->" << e.map[p] << '\n';
    }
    std::ostringstream out;
    char crc[16];
    std::snprintf(crc, sizeof crc, "%08x", detail::crc32(body.str()));
    out << "critcert 1 crc32=" << crc << '\n' << body.str();
    return out.str();
}

// Strict parser; std::nullopt on any syntactic or integrity defect.
inline std::optional<Certificate> parse_certificate(const std::string& text) {
    const auto eol = text.find('\n');
    if (eol == std::string::npos) return std::nullopt;
    const std::string header = text.substr(0, eol);
    const std::string body = text.substr(eol + 1);
    const std::string prefix = "critcert 1 crc32=";
    if (header.size() != prefix.size() + 8 || header.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string crchex = header.substr(prefix.size());
    std::uint32_t expect = 0;
    for (char ch : crchex) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else return std::nullopt;
        expect = (expect << 4) | static_cast<std::uint32_t>(d);
    }
    if (detail::crc32(body) != expect) return std::nullopt;

    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    Certificate cert;
    if (line == "verdict four_colourable") {
        cert.verdict = Certificate::Verdict::four_colourable;
        Colouring col;
        col.k = 4;
        std::size_t expectv = 0;
        while (std::getline(in, line)) {
            std::size_t v, c;
            char colon;
            std::istringstream ls(line);
            std::string word;
            if (!(ls >> word) || word != "colour") return std::nullopt;
            if (!(ls >> v >> colon >> c) || colon != ':') return std::nullopt;
            if (v != expectv++) return std::nullopt;
            if (c > 63) return std::nullopt;
            col.colour.push_back(static_cast<int>(c));
            if (ls >> word) return std::nullopt;
        }
        cert.colouring = col;
        return cert;
    }
    if (line == "verdict not_four_colourable") {
        cert.verdict = Certificate::Verdict::not_four_colourable;
        if (!std::getline(in, line)) return std::nullopt;
        if (line.rfind("witness ", 0) != 0) return std::nullopt;
        const std::string name = line.substr(8);
        if (name.empty()) return std::nullopt;
        Embedding emb;
        std::size_t expectp = 0;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string word;
            if (!(ls >> word) || word != "map") return std::nullopt;
            std::string rest;
            if (!(ls >> rest)) return std::nullopt;
            const auto arrow = rest.find("->");
            if (arrow == std::string::npos) return std::nullopt;
            std::size_t p = 0, h = 0;
            try {
                std::size_t used = 0;
                p = std::stoul(rest.substr(0, arrow), &used);
                if (used != arrow) return std::nullopt;
                const std::string hs = rest.substr(arrow + 2);
                h = std::stoul(hs, &used);
                if (used != hs.size()) return std::nullopt;
            } catch (...) {
                return std::nullopt;
            }
            if (p != expectp++) return std::nullopt;
            if (h >= kMaxOrder) return std::nullopt;
            emb.map.push_back(static_cast<int>(h));
            if (ls >> word) return std::nullopt;
        }
        if (emb.map.empty()) return std::nullopt;
        cert.witness = std::make_pair(name, emb);
        return cert;
    }
    return std::nullopt;
}

}  // namespace critgraph
