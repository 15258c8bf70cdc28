#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "offsearch/code_model.hpp"
#include "offsearch/errors.hpp"

using namespace offsearch;

namespace {

const char* kTinyTwoLoop = R"(
int main(void)
{
    double a[100], b[100];
    int i;
    for (i = 0; i < 100; i++)
        a[i] = i * 2.0;
    for (i = 0; i < 100; i++)
        b[i] = a[i] + 1.0;
    return 0;
}
)";

SourceUnit unit_of(const char* text) { return SourceUnit::from_text("mem.c", text); }

std::size_t line_count(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("scan finds every for loop once with stable ids") {
    SourceUnit u = unit_of(kTinyTwoLoop);
    LoopInventory inv = scan_loops(u);
    REQUIRE(inv.loops.size() == 2);
    CHECK(inv.candidates.size() == 2);
    for (std::size_t i = 0; i < inv.loops.size(); ++i)
        CHECK(inv.loops[i].id == static_cast<int>(i));

    // determinism: scanning the same text twice yields identical inventories
    LoopInventory again = scan_loops(u);
    REQUIRE(again.loops.size() == inv.loops.size());
    for (std::size_t i = 0; i < inv.loops.size(); ++i) {
        CHECK(again.loops[i].span == inv.loops[i].span);
        CHECK(again.loops[i].parallel_candidate == inv.loops[i].parallel_candidate);
        CHECK(again.loops[i].static_op_count == inv.loops[i].static_op_count);
    }
}

TEST_CASE("empty function body has no loops") {
    LoopInventory inv = scan_loops(unit_of("int main(void) { return 0; }"));
    CHECK(inv.loops.size() == 0);
    CHECK(inv.candidates.empty());
}

TEST_CASE("early exits disqualify a loop") {
    const char* with_break = R"(
void f(double* a)
{
    int i;
    for (i = 0; i < 10; i++) {
        if (a[i] < 0.0)
            break;
        a[i] = a[i] * 2.0;
    }
}
)";
    LoopInventory inv = scan_loops(unit_of(with_break));
    REQUIRE(inv.loops.size() == 1);
    CHECK(inv.candidates.size() == 0);

    // a break inside a nested switch belongs to the switch, not the loop
    const char* with_switch = R"(
void f(int* a)
{
    int i;
    for (i = 0; i < 10; i++) {
        switch (a[i]) {
        case 0:
            a[i] = 1;
            break;
        default:
            a[i] = 2;
        }
    }
}
)";
    inv = scan_loops(unit_of(with_switch));
    REQUIRE(inv.loops.size() == 1);
    CHECK(inv.candidates.size() == 1);

    const char* with_return = R"(
int f(int* a)
{
    int i;
    for (i = 0; i < 10; i++)
        if (a[i] < 0)
            return i;
    return -1;
}
)";
    inv = scan_loops(unit_of(with_return));
    CHECK(inv.candidates.empty());
}

TEST_CASE("loop-carried scalar writes read after the loop disqualify") {
    const char* reduction = R"(
double f(const double* a)
{
    double sum = 0.0;
    int i;
    for (i = 0; i < 10; i++)
        sum += a[i];
    return sum;
}
)";
    LoopInventory inv = scan_loops(unit_of(reduction));
    REQUIRE(inv.loops.size() == 1);
    CHECK(inv.candidates.empty());

    // scalar never read after the loop: private enough
    const char* unused_after = R"(
void f(double* a)
{
    double t = 0.0;
    int i;
    for (i = 0; i < 10; i++) {
        t = a[i];
        a[i] = t * 2.0;
    }
}
)";
    inv = scan_loops(unit_of(unused_after));
    CHECK(inv.candidates.size() == 1);

    // block-scoped temporary is private
    const char* scoped = R"(
void f(double* a)
{
    int i;
    for (i = 0; i < 10; i++) {
        double t = a[i] * 2.0;
        a[i] = t + 1.0;
    }
    a[0] = 0.0;
}
)";
    inv = scan_loops(unit_of(scoped));
    CHECK(inv.candidates.size() == 1);

    // a nested loop header's induction update is not a loop-carried write
    const char* nested = R"(
void f(double* a)
{
    int i, j;
    for (i = 0; i < 10; i++)
        for (j = 0; j < 10; j++)
            a[i * 10 + j] = 1.0;
    for (j = 0; j < 10; j++)
        a[j] = 2.0;
}
)";
    inv = scan_loops(unit_of(nested));
    REQUIRE(inv.loops.size() == 3);
    CHECK(inv.candidates.size() == 3);
}

TEST_CASE("calls outside the pure list disqualify, pure calls do not") {
    const char* impure = R"(
void f(double* a)
{
    int i;
    for (i = 0; i < 4; i++)
        printf("%f\n", a[i]);
}
)";
    CHECK(scan_loops(unit_of(impure)).candidates.empty());

    const char* pure = R"(
void f(double* a)
{
    int i;
    for (i = 0; i < 4; i++)
        a[i] = sqrt(a[i]);
}
)";
    CHECK(scan_loops(unit_of(pure)).candidates.size() == 1);

    ScanOptions opts = ScanOptions::defaults();
    opts.pure_functions.push_back("printf");
    CHECK(scan_loops(unit_of(impure), opts).candidates.size() == 1);
}

TEST_CASE("scan errors on unbalanced input; empty input scans to nothing") {
    CHECK_THROWS_AS(scan_loops(unit_of("int f() { for (i = 0; i < 3; i++ { a[i] = 0; } }")),
                    ScanError);
    CHECK_THROWS_AS(scan_loops(unit_of("int f() { /* never closed ")), ScanError);
    CHECK(scan_loops(unit_of("")).loops.empty());
}

TEST_CASE("function block sites: one per call expression") {
    const char* two_calls = R"(
void work(double* a) { a[0] = 1.0; }
int main(void)
{
    double a[4];
    work(a);
    work(a);
    return 0;
}
)";
    auto sites = scan_function_blocks(unit_of(two_calls));
    REQUIRE(sites.size() == 2);
    CHECK(sites[0].id != sites[1].id);
    CHECK(sites[0].callee_name == "work");
    CHECK(sites[0].callee_body_span.size() > 0);
    CHECK_FALSE(sites[0].body_tokens.empty());

    CHECK(scan_function_blocks(unit_of("int main(void) { return 0; }")).empty());

    // undeclared callee only matches via the interest list
    const char* external_call = R"(
int main(void)
{
    helper(3);
    return 0;
}
)";
    CHECK(scan_function_blocks(unit_of(external_call)).empty());
    auto interest = scan_function_blocks(unit_of(external_call), {"helper"});
    REQUIRE(interest.size() == 1);
    CHECK(interest[0].callee_body_span.size() == 0);
}

TEST_CASE("directive insertion: identity, placement and line count") {
    SourceUnit u = unit_of(kTinyTwoLoop);
    LoopInventory inv = scan_loops(u);
    const std::string omp = "#pragma omp parallel for";

    SUBCASE("all-zero gene reproduces the input byte for byte") {
        SourceUnit out = insert_parallel_directives(u, inv, Gene{0, 0}, omp);
        CHECK(out.text == u.text);
        CHECK(out.checksum == u.checksum);
    }
    SUBCASE("single bit inserts exactly one directive before that loop") {
        SourceUnit out = insert_parallel_directives(u, inv, Gene{1, 0}, omp);
        CHECK(line_count(out.text) == line_count(u.text) + 1);
        std::size_t at = out.text.find(omp);
        REQUIRE(at != std::string::npos);
        CHECK(at < out.text.find("a[i] = i"));
        CHECK(out.text.find(omp, at + 1) == std::string::npos);
    }
    SUBCASE("line count grows by popcount") {
        SourceUnit out = insert_parallel_directives(u, inv, Gene{1, 1}, omp);
        CHECK(line_count(out.text) == line_count(u.text) + 2);
        // output differs from input only by inserted lines
        std::string stripped = out.text;
        std::size_t pos;
        while ((pos = stripped.find("    " + omp + "\n")) != std::string::npos)
            stripped.erase(pos, omp.size() + 5);
        CHECK(stripped == u.text);
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(insert_parallel_directives(u, inv, Gene{1}, omp), LengthMismatch);
    }
}

TEST_CASE("directive text per dialect is caller-chosen") {
    SourceUnit u = unit_of(kTinyTwoLoop);
    LoopInventory inv = scan_loops(u);
    SourceUnit out = insert_parallel_directives(u, inv, Gene{0, 1}, "#pragma acc kernels loop");
    CHECK(out.text.find("#pragma acc kernels loop") != std::string::npos);
    CHECK(out.text.find("#pragma omp") == std::string::npos);
}

namespace {

// Six candidate loops, four inside the replaced callee body.
const char* kBlockFixture = R"(
#define N 64
static double x[N], y[N], z[N];

static void filter(void)
{
    int i;
    for (i = 0; i < N; i++)
        y[i] = x[i] * 0.5;
    for (i = 0; i < N; i++)
        y[i] = y[i] + 1.0;
    for (i = 0; i < N; i++)
        z[i] = y[i] * y[i];
    for (i = 0; i < N; i++)
        z[i] = z[i] - 0.25;
}

int main(void)
{
    int i;
    for (i = 0; i < N; i++)
        x[i] = i;
    filter();
    for (i = 0; i < N; i++)
        y[i] = y[i] + z[i];
    return 0;
}
)";

} // namespace

TEST_CASE("substitution removes the callee's loops from the residual") {
    SourceUnit u = unit_of(kBlockFixture);
    LoopInventory inv = scan_loops(u);
    REQUIRE(inv.candidates.size() == 6);
    auto sites = scan_function_blocks(u);
    REQUIRE(sites.size() == 1);

    SubstitutionResult sub = substitute_function_block(u, inv, sites[0], "filter_accel()");
    CHECK(sub.unit.text.find("filter_accel()") != std::string::npos);
    CHECK(sub.residual.candidates.size() == 2);
    CHECK(sub.residual.loops.size() == 2);

    // residual exclusion: no residual span intersects the replaced body
    for (const auto& l : sub.residual.loops)
        CHECK_FALSE(sites[0].callee_body_span.overlaps(l.span));

    // residual spans line up with the new text (directive insertion still works)
    Gene all_ones(sub.residual.candidates.size(), 1);
    SourceUnit rewritten =
        insert_parallel_directives(sub.unit, sub.residual, all_ones, "#pragma omp parallel for");
    CHECK(line_count(rewritten.text) == line_count(sub.unit.text) + 2);
    SourceUnit zero =
        insert_parallel_directives(sub.unit, sub.residual, Gene{0, 0}, "#pragma omp parallel for");
    CHECK(zero.text == sub.unit.text);

    SUBCASE("a second overlapping substitution conflicts") {
        CHECK_THROWS_AS(
            substitute_function_block(sub.unit, sub.residual, sites[0], "other_accel()"),
            SpanConflict);
    }
    SUBCASE("no substitution leaves the inventory as-is") {
        // the trivial case: nothing replaced means nothing removed
        CHECK(inv.candidates.size() == 6);
    }
}

TEST_CASE("substitution keeps argument text via {args}") {
    const char* with_args = R"(
static void scale(double* p, int n)
{
    int i;
    for (i = 0; i < n; i++)
        p[i] = p[i] * 2.0;
}
int main(void)
{
    double buf[8];
    scale(buf, 8);
    return 0;
}
)";
    SourceUnit u = unit_of(with_args);
    LoopInventory inv = scan_loops(u);
    auto sites = scan_function_blocks(u);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].call_args == "buf, 8");
    SubstitutionResult sub =
        substitute_function_block(u, inv, sites[0], "scale_accel({args})");
    CHECK(sub.unit.text.find("scale_accel(buf, 8)") != std::string::npos);
}

TEST_CASE("checksum is deterministic and content-derived") {
    SourceUnit a = unit_of("int x;");
    SourceUnit b = unit_of("int x;");
    SourceUnit c = unit_of("int y;");
    CHECK(a.checksum == b.checksum);
    CHECK(a.checksum != c.checksum);
}

TEST_CASE("canonical tokens are rename-invariant") {
    auto a = canonical_tokens("for (i = 0; i < n; i++) acc[i] = src[i];");
    auto b = canonical_tokens("for (k = 0; k < len; k++) dst[k] = from[k];");
    CHECK(a == b);
    auto c = canonical_tokens("for (k = 0; k < len; k++) dst[k] = from[k + 1];");
    CHECK(a != c);
}
