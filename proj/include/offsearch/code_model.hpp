#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "offsearch/errors.hpp"
#include "offsearch/gene.hpp"

namespace offsearch {

// Half-open byte range [begin, end) into a SourceUnit's text.
struct ByteSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool contains(std::size_t off) const { return off >= begin && off < end; }
    bool contains(const ByteSpan& o) const { return o.begin >= begin && o.end <= end; }
    bool overlaps(const ByteSpan& o) const { return begin < o.end && o.begin < end; }
    bool operator==(const ByteSpan& o) const = default;
};

struct SourceUnit {
    std::string path;
    std::string text;
    std::uint64_t checksum = 0;
    // Regions already replaced by substitutions, in current-text coordinates.
    std::vector<ByteSpan> replaced_spans;

    static SourceUnit from_text(std::string path, std::string text);
    static SourceUnit from_file(const std::string& path);
};

std::uint64_t fnv1a64(const std::string& text);

struct LoopStatement {
    int id = 0;                    // consecutive from 0 in document order
    ByteSpan span;                 // whole statement, 'for' through body end
    int nest_depth = 0;            // enclosing for-loops
    std::string header_text;       // 'for (...)' text
    bool parallel_candidate = false;
    long long static_op_count = 0;   // arithmetic operator tokens in the body
    long long static_mem_bytes = 0;  // 8 bytes per subscript expression in the body
    long long trip_count = 0;        // from the profile sidecar; 0 when absent
};

struct LoopInventory {
    std::string unit_path;
    std::uint64_t unit_checksum = 0;
    std::vector<LoopStatement> loops;
    std::vector<int> candidates;   // candidate loop ids, document order
    std::size_t gene_length() const { return candidates.size(); }
    // Ids stay stable across substitution; a residual inventory is sparse.
    const LoopStatement& loop(int id) const;
};

struct FunctionBlockSite {
    int id = 0;
    std::string callee_name;
    ByteSpan span;                  // the call expression, callee through ')'
    ByteSpan callee_body_span;      // body of the called function; empty if external
    std::vector<std::string> body_tokens;  // canonicalized tokens of the callee body
    std::string call_args;          // original argument text, verbatim
};

struct ScanOptions {
    // Calls to anything outside this list make the enclosing loops
    // non-candidates. Seeded with the usual <math.h> names.
    std::vector<std::string> pure_functions;

    static ScanOptions defaults();
    bool is_pure(const std::string& name) const;
};

// Lexer shared by the scanner and the clone matcher. Comments, whitespace
// and preprocessor lines are dropped.
struct Token {
    enum Kind { Ident, Keyword, Number, String, Punct } kind = Punct;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& text);

// Identifiers renamed positionally (id0, id1, ...); keywords, numbers and
// punctuation kept. Two bodies differing only by consistent renames
// canonicalize identically.
std::vector<std::string> canonical_tokens(const std::string& code);

LoopInventory scan_loops(const SourceUnit& unit,
                         const ScanOptions& opts = ScanOptions::defaults());

// One site per call expression whose callee is defined in the unit or named
// on the interest list.
std::vector<FunctionBlockSite>
scan_function_blocks(const SourceUnit& unit,
                     const std::vector<std::string>& interest_list = {});

// Inserts `directive_line` (one line, indentation copied from the loop
// header) immediately before each candidate loop whose bit is 1.
SourceUnit insert_parallel_directives(const SourceUnit& unit,
                                      const LoopInventory& inventory,
                                      const Gene& bits,
                                      const std::string& directive_line);

struct SubstitutionResult {
    SourceUnit unit;          // call region replaced by the entry point
    LoopInventory residual;   // loops inside the replaced body removed,
                              // remaining spans shifted to the new text
};

// `entry_point` may contain "{args}", replaced by the original argument text.
SubstitutionResult substitute_function_block(const SourceUnit& unit,
                                             const LoopInventory& inventory,
                                             const FunctionBlockSite& site,
                                             const std::string& entry_point);

} // namespace offsearch
