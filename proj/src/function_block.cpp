#include "offsearch/function_block.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "offsearch/errors.hpp"

namespace offsearch {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string dirname_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? "." : path.substr(0, slash);
}

} // namespace

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InfrastructureError("cannot read registry: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), dirname_of(path));
}

Registry Registry::parse(const std::string& text, const std::string& base_dir) {
    Registry reg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = t.find('|', pos);
            fields.push_back(trim(t.substr(pos, bar - pos)));
            if (bar == std::string::npos)
                break;
            pos = bar + 1;
        }
        if (fields.size() < 4)
            throw InfrastructureError("registry line " + std::to_string(lineno) +
                                      ": need name|device|entry point|token file[|speed class]");
        RegistryEntry e;
        e.block_name = fields[0];
        e.device_kind = device_kind_from_string(fields[1]);
        e.entry_point = fields[2];
        if (!fields[3].empty()) {
            std::string ref_path = fields[3][0] == '/' ? fields[3] : base_dir + "/" + fields[3];
            std::ifstream ref(ref_path);
            if (!ref)
                throw InfrastructureError("registry line " + std::to_string(lineno) +
                                          ": cannot read reference tokens: " + ref_path);
            std::ostringstream rs;
            rs << ref.rdbuf();
            e.reference_tokens = canonical_tokens(rs.str());
        }
        if (fields.size() >= 5)
            e.speed_class = fields[4];
        for (const auto& prior : reg.entries)
            if (prior.block_name == e.block_name && prior.device_kind == e.device_kind)
                throw InfrastructureError("registry line " + std::to_string(lineno) +
                                          ": duplicate entry for (" + e.block_name + ", " +
                                          to_string(e.device_kind) + ")");
        reg.entries.push_back(std::move(e));
    }
    return reg;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (std::find(out.begin(), out.end(), e.block_name) == out.end())
            out.push_back(e.block_name);
    return out;
}

std::string normalize_block_name(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == '_')
            continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

double token_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    auto grams = [](const std::vector<std::string>& toks) {
        std::set<std::string> g;
        if (toks.size() < 3) {
            std::string whole;
            for (const auto& t : toks)
                whole += t + "\x1f";
            if (!whole.empty())
                g.insert(whole);
            return g;
        }
        for (std::size_t i = 0; i + 3 <= toks.size(); ++i)
            g.insert(toks[i] + "\x1f" + toks[i + 1] + "\x1f" + toks[i + 2]);
        return g;
    };
    std::set<std::string> ga = grams(a), gb = grams(b);
    if (ga.empty() && gb.empty())
        return 1.0;
    std::size_t inter = 0;
    for (const auto& g : ga)
        inter += gb.count(g);
    std::size_t uni = ga.size() + gb.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<BlockMatch> match_by_name(const std::vector<FunctionBlockSite>& sites,
                                      const Registry& registry) {
    std::vector<BlockMatch> out;
    for (const auto& site : sites) {
        std::string norm = normalize_block_name(site.callee_name);
        for (const auto& entry : registry.entries) {
            if (normalize_block_name(entry.block_name) != norm)
                continue;
            BlockMatch m;
            m.site = site;
            m.entry = entry;
            m.match_kind = MatchKind::Name;
            m.similarity = 1.0;
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<BlockMatch> match_by_similarity(const std::vector<FunctionBlockSite>& sites,
                                            const Registry& registry, double threshold) {
    std::vector<BlockMatch> out;
    for (const auto& site : sites) {
        if (site.body_tokens.empty())
            continue;
        for (const auto& entry : registry.entries) {
            if (entry.reference_tokens.empty())
                continue;
            double sim = token_similarity(site.body_tokens, entry.reference_tokens);
            if (sim < threshold)
                continue;
            BlockMatch m;
            m.site = site;
            m.entry = entry;
            m.match_kind = MatchKind::Similarity;
            m.similarity = sim;
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<OffloadPattern> propose_block_patterns(const std::vector<BlockMatch>& matches,
                                                   DeviceKind device) {
    std::vector<const BlockMatch*> ranked;
    for (const auto& m : matches)
        if (m.entry.device_kind == device)
            ranked.push_back(&m);
    std::stable_sort(ranked.begin(), ranked.end(), [](const BlockMatch* a, const BlockMatch* b) {
        if (a->match_kind != b->match_kind)
            return a->match_kind == MatchKind::Name;
        return a->similarity > b->similarity;
    });

    std::vector<OffloadPattern> out;
    std::vector<ByteSpan> taken;
    for (const BlockMatch* m : ranked) {
        bool conflict = false;
        for (const auto& span : taken)
            if (span.overlaps(m->site.span))
                conflict = true;
        if (conflict)
            continue; // the loser of an overlap is dropped; callers log it
        taken.push_back(m->site.span);
        OffloadPattern p;
        p.device = device;
        p.method = OffloadMethod::FunctionBlock;
        p.block_name = m->entry.block_name;
        p.site_id = m->site.id;
        p.entry_point = m->entry.entry_point;
        p.site_span = m->site.span;
        p.block_body_span = m->site.callee_body_span;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace offsearch
