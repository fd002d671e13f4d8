#include "cycalc/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "cycalc/invariants.hpp"

namespace cycalc {

namespace {
const std::string kDatasetTsv =
#include "tables_tsv.inc"
    ;
const std::string kFanoEulerTsv =
#include "fano_euler_tsv.inc"
    ;

// Frozen fingerprints of the shipped fixtures.
constexpr uint64_t kDatasetChecksum = 0x70a39353bdb885fdULL;
constexpr uint64_t kFanoEulerChecksum = 0x75890a3d85023708ULL;
}  // namespace

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::string& dataset_tsv() {
    if (fnv1a64(kDatasetTsv) != kDatasetChecksum)
        throw CalcError("checksum", "embedded classification dataset is corrupt");
    return kDatasetTsv;
}

const std::string& fano_euler_tsv() {
    if (fnv1a64(kFanoEulerTsv) != kFanoEulerChecksum)
        throw CalcError("checksum", "embedded quotient Euler fixture is corrupt");
    return kFanoEulerTsv;
}

Family family_from_string(const std::string& name) {
    if (name == "smooth_fano") return Family::smooth_fano;
    if (name == "fano_enriques") return Family::fano_enriques;
    if (name == "index_half") return Family::index_half;
    if (name == "p1112") return Family::p1112;
    throw CalcError("bad-dataset", "unknown family '" + name + "'");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::smooth_fano: return "smooth_fano";
        case Family::fano_enriques: return "fano_enriques";
        case Family::index_half: return "index_half";
        case Family::p1112: return "p1112";
    }
    return "?";
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long to_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CalcError("bad-dataset", std::string("bad ") + what + " value '" + s + "'");
    }
}

std::string row_id(const TableRow& r) {
    return to_string(r.family) + "(N=" + std::to_string(r.N) + ",s=" + std::to_string(r.s) +
           ",h3=" + std::to_string(r.h3) + ")";
}

}  // namespace

std::vector<TableRow> parse_dataset_tsv(const std::string& tsv) {
    std::istringstream in(tsv);
    std::string line;
    if (!std::getline(in, line) || split(line, '\t') !=
            std::vector<std::string>{"family", "N", "s", "h3", "hc2", "e", "refs"})
        throw CalcError("bad-dataset", "dataset header mismatch");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cols = split(line, '\t');
        if (cols.size() != 7)
            throw CalcError("bad-dataset", "expected 7 columns, got line '" + line + "'");
        TableRow r;
        r.family = family_from_string(cols[0]);
        r.N = to_int(cols[1], "N");
        r.s = to_int(cols[2], "s");
        r.h3 = to_int(cols[3], "h3");
        r.hc2 = to_int(cols[4], "hc2");
        if (!cols[5].empty()) {
            for (auto& item : split(cols[5], ',')) {
                EulerValue ev;
                if (!item.empty() && item.back() == '*') {
                    ev.starred = true;
                    item.pop_back();
                }
                ev.value = to_int(item, "e");
                r.e_values.push_back(ev);
            }
        }
        r.refs = cols[6];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string render_dataset_tsv(const std::vector<TableRow>& rows) {
    std::string out = "family\tN\ts\th3\thc2\te\trefs\n";
    for (const auto& r : rows) {
        out += to_string(r.family) + "\t" + std::to_string(r.N) + "\t" + std::to_string(r.s) +
               "\t" + std::to_string(r.h3) + "\t" + std::to_string(r.hc2) + "\t";
        for (size_t i = 0; i < r.e_values.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(r.e_values[i].value);
            if (r.e_values[i].starred) out += "*";
        }
        out += "\t" + r.refs + "\n";
    }
    return out;
}

std::vector<FanoEulerEntry> parse_fano_euler_tsv(const std::string& tsv) {
    std::istringstream in(tsv);
    std::string line;
    if (!std::getline(in, line) ||
        split(line, '\t') != std::vector<std::string>{"family", "N", "s", "h3", "euler_y"})
        throw CalcError("bad-dataset", "euler fixture header mismatch");
    std::vector<FanoEulerEntry> entries;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cols = split(line, '\t');
        if (cols.size() != 5)
            throw CalcError("bad-dataset", "expected 5 columns, got line '" + line + "'");
        FanoEulerEntry e;
        e.family = family_from_string(cols[0]);
        e.N = to_int(cols[1], "N");
        e.s = to_int(cols[2], "s");
        e.h3 = to_int(cols[3], "h3");
        e.euler_Y = Rational::parse(cols[4]);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<TableRow> load_dataset() {
    if (const char* path = std::getenv("CYCALC_DATASET")) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw CalcError("bad-dataset", std::string("cannot open dataset '") + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_dataset_tsv(buf.str());
    }
    return parse_dataset_tsv(dataset_tsv());
}

std::vector<FanoEulerEntry> load_fano_euler() {
    return parse_fano_euler_tsv(fano_euler_tsv());
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Rational row_branch_surface_euler(const TableRow& row) {
    QuotientData q;
    q.d = Rational(row.h3, 2);
    q.s = row.s;
    q.N = row.N;
    SpaceModel y = quotient_space_model(q);
    return surface_euler(y, y.cls({{"H'", Rational(row.s)}}));
}

bool euler_value_consistent(const TableRow& row, long long e_value) {
    // e = 2 e(Y) - e(S) - N with integral e(Y).
    Rational implied_2eY = Rational(e_value) + row_branch_surface_euler(row) + Rational(row.N);
    return (implied_2eY / Rational(2)).is_integer();
}

ValidationReport validate_all(const std::vector<TableRow>& rows,
                              const std::vector<FanoEulerEntry>& euler_fixture) {
    ValidationReport rep;
    auto& checks = rep.checks;
    auto add = [&](CheckResult c) {
        c.pass = c.failures.empty();
        checks.push_back(std::move(c));
    };

    // (a) H.c2 identity on every row.
    {
        CheckResult c{"row-identity"};
        for (const auto& r : rows) {
            Rational expected = hc2_of_cover(r.s, r.N, Rational(r.h3));
            if (expected != Rational(r.hc2))
                c.failures.push_back(row_id(r) + ": hc2 " + std::to_string(r.hc2) +
                                     " != " + expected.str());
        }
        add(std::move(c));
    }

    // (b) global bounds and sharpness.
    {
        CheckResult c{"bounds"};
        for (const auto& r : rows) {
            if (r.h3 < 1 || r.h3 > 44) c.failures.push_back(row_id(r) + ": h3 out of [1,44]");
            if (r.hc2 < 20 || r.hc2 > 92) c.failures.push_back(row_id(r) + ": hc2 out of [20,92]");
            if (r.N < 0 || r.N > 8) c.failures.push_back(row_id(r) + ": N out of [0,8]");
            if (r.s < 2 || r.s > 10) c.failures.push_back(row_id(r) + ": s out of [2,10]");
        }
        add(std::move(c));
    }
    {
        CheckResult c{"sharpness"};
        auto attained = [&](auto field, long long v) {
            return std::any_of(rows.begin(), rows.end(),
                               [&](const TableRow& r) { return field(r) == v; });
        };
        auto h3f = [](const TableRow& r) { return r.h3; };
        auto hc2f = [](const TableRow& r) { return r.hc2; };
        auto nf = [](const TableRow& r) { return r.N; };
        auto sf = [](const TableRow& r) { return r.s; };
        struct Extreme { const char* label; bool ok; };
        for (auto [label, ok] : std::initializer_list<Extreme>{
                 {"h3 = 1", attained(h3f, 1)},
                 {"h3 = 44", attained(h3f, 44)},
                 {"hc2 = 20", attained(hc2f, 20)},
                 {"hc2 = 92", attained(hc2f, 92)},
                 {"N = 0", attained(nf, 0)},
                 {"N = 8", attained(nf, 8)},
                 {"s = 2", attained(sf, 2)},
                 {"s = 10", attained(sf, 10)}})
            if (!ok) c.failures.push_back(std::string("bound not attained: ") + label);
        add(std::move(c));
    }

    // (c) Euler reconstruction of every unstarred e value.
    {
        CheckResult c{"euler-reconstruction"};
        std::map<std::tuple<Family, long long, long long, long long>, Rational> ey;
        for (const auto& e : euler_fixture) ey[{e.family, e.N, e.s, e.h3}] = e.euler_Y;
        for (const auto& r : rows) {
            for (const auto& ev : r.e_values) {
                if (ev.starred) continue;
                auto it = ey.find({r.family, r.N, r.s, r.h3});
                if (it == ey.end()) {
                    c.failures.push_back(row_id(r) + ": no e(Y) fixture entry");
                    continue;
                }
                Rational eS = row_branch_surface_euler(r);
                Rational ex = euler_of_cover(it->second, eS, r.N);
                if (ex != Rational(ev.value))
                    c.failures.push_back(row_id(r) + ": e " + std::to_string(ev.value) +
                                         " != " + ex.str());
            }
        }
        add(std::move(c));
    }

    // (d) per-family invariants.
    {
        CheckResult c{"family-invariants"};
        for (const auto& r : rows) {
            bool ok = true;
            switch (r.family) {
                case Family::smooth_fano: ok = (r.N == 0); break;
                case Family::fano_enriques: ok = (r.N == 8); break;
                case Family::index_half: ok = (r.s == 2); break;
                case Family::p1112: ok = (r.N == 1 && r.s == 10); break;
            }
            if (!ok) c.failures.push_back(row_id(r) + ": family field constraint violated");
        }
        add(std::move(c));
    }

    // Starred values: the implied e(Y) must be integral.  The one tabulated
    // exception (index_half, N=2, h3=30, e=-95) is carried verbatim and is
    // expected to flag; any change to the anomaly set is itself a failure.
    {
        CheckResult c{"starred-consistency"};
        std::set<std::string> anomalies;
        for (const auto& r : rows)
            for (const auto& ev : r.e_values)
                if (ev.starred && !euler_value_consistent(r, ev.value))
                    anomalies.insert(row_id(r));
        std::set<std::string> expected{"index_half(N=2,s=2,h3=30)"};
        if (anomalies != expected) {
            for (const auto& a : anomalies)
                if (!expected.count(a)) c.failures.push_back("unexpected anomaly: " + a);
            for (const auto& a : expected)
                if (!anomalies.count(a)) c.failures.push_back("expected anomaly missing: " + a);
        }
        add(std::move(c));
    }

    // Empirical regularity of the index-(1/2) block: h3 = N (mod 4).
    {
        CheckResult c{"index-half-mod-4"};
        for (const auto& r : rows)
            if (r.family == Family::index_half && ((r.h3 - r.N) % 4 + 4) % 4 != 0)
                c.failures.push_back(row_id(r) + ": h3 != N (mod 4)");
        add(std::move(c));
    }

    // Row census: 17 + 3 + 29 + 1.
    {
        CheckResult c{"row-census"};
        std::map<Family, long long> counts;
        for (const auto& r : rows) counts[r.family]++;
        auto expect = [&](Family f, long long n) {
            if (counts[f] != n)
                c.failures.push_back(to_string(f) + ": " + std::to_string(counts[f]) +
                                     " rows, expected " + std::to_string(n));
        };
        expect(Family::smooth_fano, 17);
        expect(Family::fano_enriques, 3);
        expect(Family::index_half, 29);
        expect(Family::p1112, 1);
        add(std::move(c));
    }

    return rep;
}

ValidationReport validate_all(const std::vector<TableRow>& rows) {
    return validate_all(rows, load_fano_euler());
}

std::vector<TableRow> query(const std::vector<TableRow>& rows, const QueryFilter& f) {
    if ((f.h3_min && f.h3_max && *f.h3_min > *f.h3_max) ||
        (f.hc2_min && f.hc2_max && *f.hc2_min > *f.hc2_max))
        throw CalcError("bad-range", "query range has min > max");
    std::vector<TableRow> out;
    for (const auto& r : rows) {
        if (f.family && r.family != *f.family) continue;
        if (f.N && r.N != *f.N) continue;
        if (f.s && r.s != *f.s) continue;
        if (f.h3_min && r.h3 < *f.h3_min) continue;
        if (f.h3_max && r.h3 > *f.h3_max) continue;
        if (f.hc2_min && r.hc2 < *f.hc2_min) continue;
        if (f.hc2_max && r.hc2 > *f.hc2_max) continue;
        out.push_back(r);
    }
    std::stable_sort(out.begin(), out.end(), [](const TableRow& a, const TableRow& b) {
        return std::tuple(a.family, a.N, a.s, a.h3) < std::tuple(b.family, b.N, b.s, b.h3);
    });
    return out;
}

}  // namespace cycalc
