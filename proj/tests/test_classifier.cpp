#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/classifier.hpp"
#include "nodal/json_io.hpp"
#include "oracles.hpp"

using nodal::CaseLabel;
using nodal::CaseTag;
using nodal::ClassificationVerdict;
using nodal::FibreKind;
using nodal::KodairaFibre;

namespace {

std::vector<std::string> case_tags(const ClassificationVerdict& v) {
    std::vector<std::string> tags;
    for (const CaseLabel& c : v.cases) tags.push_back(to_string(c.tag));
    return tags;
}

const nodal::TraceStep* find_step(const ClassificationVerdict& v, const std::string& operation) {
    for (const nodal::TraceStep& s : v.trace)
        if (s.operation == operation) return &s;
    return nullptr;
}

std::vector<std::vector<std::string>> multiset_names(
    const std::vector<std::vector<KodairaFibre>>& multisets) {
    std::vector<std::vector<std::string>> out;
    for (const auto& m : multisets) {
        std::vector<std::string> names;
        for (const KodairaFibre& f : m) names.push_back(f.name());
        out.push_back(std::move(names));
    }
    return out;
}

}  // namespace

TEST_CASE("kodaira fibre euler numbers match the classical table") {
    CHECK(KodairaFibre(FibreKind::In, 1).euler() == 1);
    CHECK(KodairaFibre(FibreKind::In, 5).euler() == 5);
    CHECK(KodairaFibre(FibreKind::II).euler() == 2);
    CHECK(KodairaFibre(FibreKind::III).euler() == 3);
    CHECK(KodairaFibre(FibreKind::IV).euler() == 4);
    CHECK(KodairaFibre(FibreKind::InStar, 0).euler() == 6);
    CHECK(KodairaFibre(FibreKind::InStar, 4).euler() == 10);
    CHECK(KodairaFibre(FibreKind::IVStar).euler() == 8);
    CHECK(KodairaFibre(FibreKind::IIIStar).euler() == 9);
    CHECK(KodairaFibre(FibreKind::IIStar).euler() == 10);
}

TEST_CASE("fibre names parse and print") {
    for (const KodairaFibre& f : nodal::singular_fibre_catalog(14)) {
        const KodairaFibre reparsed = KodairaFibre::parse(f.name());
        CHECK(reparsed == f);
        CHECK(reparsed.euler() == f.euler());
    }
    CHECK(KodairaFibre(FibreKind::InStar, 0).name() == "I0*");
    CHECK(KodairaFibre(FibreKind::In, 12).name() == "I12");
    for (const std::string bad : {"", "I0", "V", "I*", "I-1", "II**", "junk"})
        CHECK_THROWS_AS(KodairaFibre::parse(bad), std::invalid_argument);
    CHECK_THROWS_AS(KodairaFibre(FibreKind::In, 0), std::invalid_argument);
    CHECK_THROWS_AS(KodairaFibre(FibreKind::InStar, -1), std::invalid_argument);
    CHECK_THROWS_AS(KodairaFibre(FibreKind::IV, 3), std::invalid_argument);
}

TEST_CASE("catalog is sorted and complete") {
    const auto catalog = nodal::singular_fibre_catalog(5);
    std::vector<std::string> names;
    for (const KodairaFibre& f : catalog) names.push_back(f.name());
    CHECK(names == std::vector<std::string>{"I1", "I2", "II", "I3", "III", "I4", "IV", "I5"});
    CHECK(nodal::singular_fibre_catalog(0).empty());
}

TEST_CASE("nodal capacities agree with the subset oracle and the hand table") {
    // (euler, capacity) read off the dual graphs by hand.
    const std::map<std::string, int> frozen = {
        {"I1", 0},  {"I2", 1},  {"II", 0},   {"I3", 1},   {"III", 1}, {"I4", 2},
        {"IV", 1},  {"I5", 2},  {"I0*", 4},  {"I6", 3},   {"I7", 3},  {"I1*", 4},
        {"I8", 4},  {"I2*", 5}, {"IV*", 4},  {"III*", 5}, {"I9", 4},  {"I10", 5},
        {"I3*", 5}, {"II*", 5}, {"I11", 5},  {"I12", 6},  {"I4*", 6},  {"I5*", 6},
        {"I6*", 7},
    };
    for (const KodairaFibre& f : nodal::singular_fibre_catalog(12)) {
        const int brute = oracle::max_independent_set(f.dual_graph());
        CHECK_MESSAGE(f.nodal_capacity() == brute, f.name());
        REQUIRE(frozen.count(f.name()) == 1);
        CHECK_MESSAGE(f.nodal_capacity() == frozen.at(f.name()), f.name());
    }
}

TEST_CASE("max independent set on handmade graphs") {
    // Path on five vertices.
    nodal::FibreGraph path;
    path.n = 5;
    path.adj = {0b00010, 0b00101, 0b01010, 0b10100, 0b01000};
    path.minus_two = {true, true, true, true, true};
    CHECK(nodal::max_independent_set(path) == 3);
    CHECK(oracle::max_independent_set(path) == 3);

    // Excluding vertices removes them from the count.
    path.minus_two = {false, true, true, true, true};
    CHECK(nodal::max_independent_set(path) == 2);
    CHECK(oracle::max_independent_set(path) == 2);

    nodal::FibreGraph empty;
    CHECK(nodal::max_independent_set(empty) == 0);
}

TEST_CASE("elliptic fibre search") {
    // The near-maximal h11 = 10 case: Euler budget 12 with 8 disjoint
    // (-2)-curves is met only by two I0* fibres.
    const auto unique = multiset_names(nodal::elliptic_fibre_search(12, 8));
    REQUIRE(unique.size() == 1);
    CHECK(unique[0] == std::vector<std::string>{"I0*", "I0*"});

    CHECK(nodal::elliptic_fibre_search(12, 9).empty());

    const auto half = multiset_names(nodal::elliptic_fibre_search(6, 4));
    REQUIRE(half.size() == 1);
    CHECK(half[0] == std::vector<std::string>{"I0*"});

    // Zero budget admits exactly the empty configuration.
    CHECK(nodal::elliptic_fibre_search(0, 0).size() == 1);
    CHECK(nodal::elliptic_fibre_search(0, 1).empty());
    CHECK(nodal::elliptic_fibre_search(1, 1).empty());

    CHECK_THROWS_AS(nodal::elliptic_fibre_search(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(nodal::elliptic_fibre_search(0, -2), std::invalid_argument);
    CHECK_THROWS_AS(nodal::elliptic_fibre_search(31, 0), std::domain_error);
}

TEST_CASE("fibre search matches the independent enumerator") {
    for (int euler = 0; euler <= 10; ++euler)
        for (int demand = 0; demand <= 6; demand += 2) {
            const auto got = multiset_names(nodal::elliptic_fibre_search(euler, demand));
            const auto expected = oracle::fibre_multisets(euler, demand);
            CHECK_MESSAGE(got == expected, "euler=", euler, " demand=", demand);
        }
}

TEST_CASE("blow-down bound") {
    CHECK(nodal::mu_bound_after_blowdowns(0, 1) == 0);
    CHECK(nodal::mu_bound_after_blowdowns(0, 2) == 1);
    CHECK(nodal::mu_bound_after_blowdowns(3, 5) == 5);
    CHECK_THROWS_AS(nodal::mu_bound_after_blowdowns(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(nodal::mu_bound_after_blowdowns(0, -1), std::invalid_argument);
}

TEST_CASE("maximal classification, nef branch") {
    const ClassificationVerdict v = nodal::classify_max_nodal(true);
    CHECK(case_tags(v) == std::vector<std::string>{"FPP"});
    CHECK(existence_status(v.cases[0]) == nodal::Existence::exists);

    const nodal::TraceStep* enumerate = find_step(v, "bmy_solution_enumerator");
    REQUIRE(enumerate != nullptr);
    CHECK(enumerate->outputs["solutions"].size() == 1);
    REQUIRE(find_step(v, "bmy_check") != nullptr);
    CHECK((*find_step(v, "bmy_check")).outputs["verdict"] == "equality");
}

TEST_CASE("maximal classification, non-nef branch") {
    const ClassificationVerdict v = nodal::classify_max_nodal(false);
    CHECK(case_tags(v) == std::vector<std::string>{"P2", "F2"});

    // The determinant table (9 - k) 2^k for k = 0..6 appears in the trace
    // with the square flag raised exactly twice.
    const std::vector<std::string> dets = {"9", "16", "28", "48", "80", "128", "192"};
    int seen = 0;
    int squares = 0;
    for (const nodal::TraceStep& s : v.trace) {
        if (s.operation != "square_discriminant_test") continue;
        CHECK(s.outputs["det"] == dets[static_cast<std::size_t>(seen)]);
        if (s.outputs["square"].get<bool>()) ++squares;
        ++seen;
    }
    CHECK(seen == 7);
    CHECK(squares == 2);
}

TEST_CASE("near-maximal classification over the admissible triples") {
    struct Expected {
        int q, pg, h11;
        std::vector<std::string> tags;
        std::optional<int> ksq;  // for the 1-f rows
    };
    const std::vector<Expected> table = {
        {0, 0, 2, {"1-f"}, 8},  {0, 0, 3, {"1-f"}, 7},
        {0, 0, 4, {"1-f"}, 6},  {0, 0, 5, {}, std::nullopt},
        {0, 0, 6, {"1-f"}, 4},  {0, 0, 7, {}, std::nullopt},
        {0, 0, 8, {"1-f"}, 2},  {0, 0, 9, {"1-f"}, 1},
        {0, 0, 10, {"1-c", "1-d"}, std::nullopt},
        {0, 1, 2, {"1-e"}, std::nullopt},
        {1, 0, 2, {"1-a", "1-b"}, std::nullopt},
    };
    for (const Expected& e : table) {
        const ClassificationVerdict v = nodal::classify_near_max(e.q, e.pg, e.h11, true);
        CHECK_MESSAGE(case_tags(v) == e.tags, "q=", e.q, " pg=", e.pg, " h11=", e.h11);
        if (e.ksq) {
            REQUIRE(v.cases.size() == 1);
            REQUIRE(v.cases[0].ksq.has_value());
            CHECK(*v.cases[0].ksq == *e.ksq);
        }
        if (e.tags.empty()) {
            const nodal::TraceStep* excluded = find_step(v, "exclude_case");
            REQUIRE(excluded != nullptr);
            CHECK(excluded->outputs["excluded"].get<bool>());
        }
    }
}

TEST_CASE("near-maximal 1-f existence statuses") {
    const std::map<int, nodal::Existence> expected = {
        {1, nodal::Existence::open},     {2, nodal::Existence::exists},
        {4, nodal::Existence::exists},   {6, nodal::Existence::exists},
        {7, nodal::Existence::open},     {8, nodal::Existence::exists},
    };
    for (const auto& [ksq, status] : expected) {
        const CaseLabel label{CaseTag::C1f, ksq, ""};
        CHECK(existence_status(label) == status);
    }
    CHECK(existence_status(CaseLabel{CaseTag::C1f, 3, ""}) == nodal::Existence::excluded);
    CHECK(existence_status(CaseLabel{CaseTag::C1f, 5, ""}) == nodal::Existence::excluded);
    CHECK_THROWS_AS(existence_status(CaseLabel{CaseTag::C1f, 0, ""}), std::invalid_argument);
    CHECK_THROWS_AS(existence_status(CaseLabel{CaseTag::C1f, std::nullopt, ""}),
                    std::invalid_argument);
    CHECK(existence_status(CaseLabel{CaseTag::C1c, std::nullopt, ""}) == nodal::Existence::exists);
}

TEST_CASE("near-maximal h11 = 10 names the fibre configuration") {
    const ClassificationVerdict v = nodal::classify_near_max(0, 0, 10, true);
    const nodal::TraceStep* fibres = find_step(v, "elliptic_fibre_search");
    REQUIRE(fibres != nullptr);
    CHECK(fibres->outputs["multisets"].size() == 1);
    REQUIRE(v.cases.size() == 2);
    CHECK(v.cases[1].note.find("I0* + I0*") != std::string::npos);
}

TEST_CASE("near-maximal rejects inadmissible invariants") {
    CHECK_THROWS_AS(nodal::classify_near_max(0, 0, 1, true), std::domain_error);
    CHECK_THROWS_AS(nodal::classify_near_max(0, 0, 11, true), std::domain_error);
    CHECK_THROWS_AS(nodal::classify_near_max(2, 0, 2, true), std::domain_error);
    CHECK_THROWS_AS(nodal::classify_near_max(0, 2, 2, true), std::domain_error);
    CHECK_THROWS_AS(nodal::classify_near_max(-1, 0, 2, true), std::invalid_argument);
}

TEST_CASE("near-maximal non-nef branch walks all three trees") {
    const ClassificationVerdict v = nodal::classify_near_max(0, 0, 2, false);
    CHECK(case_tags(v) ==
          std::vector<std::string>{"2-a", "2-b", "2-c", "2-d", "2-e", "2-f"});
    CHECK(v.trace.front().operation == "kodaira_dimension_split");
    // The invariants are ignored on this branch.
    const ClassificationVerdict same = nodal::classify_near_max(1, 1, 7, false);
    CHECK(case_tags(same) == case_tags(v));
}

TEST_CASE("nonminimal decision trees") {
    CHECK(case_tags(nodal::nonminimal_decision_tree(nodal::NonminimalKind::kappa_nonneg)) ==
          std::vector<std::string>{"2-a"});
    CHECK(case_tags(nodal::nonminimal_decision_tree(nodal::NonminimalKind::irrational_ruled)) ==
          std::vector<std::string>{"2-b"});
    CHECK(case_tags(nodal::nonminimal_decision_tree(nodal::NonminimalKind::rational)) ==
          std::vector<std::string>{"2-c", "2-d", "2-e", "2-f"});
}

TEST_CASE("verdict serialization carries tags, notes, and statuses") {
    const ClassificationVerdict v = nodal::classify_near_max(0, 0, 4, true);
    const nodal::Json j = nodal::verdict_to_json(v);
    REQUIRE(j["cases"].size() == 1);
    CHECK(j["cases"][0]["tag"] == "1-f");
    CHECK(j["cases"][0]["ksq"] == 6);
    CHECK(j["cases"][0]["existence"] == "exists");
    REQUIRE(j["trace"].is_array());
    CHECK(j["trace"][0]["step"] == 0);
    for (const nodal::Json& s : j["trace"]) {
        CHECK(s.contains("operation"));
        CHECK(s.contains("inputs"));
        CHECK(s.contains("outputs"));
        CHECK(s.contains("citation"));
    }
}
