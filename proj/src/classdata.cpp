#include "topgen/classdata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace topgen::classdata {

namespace {

// Canonical entry order: partitions descending lexicographically, ties by
// label.  Keeps equality-up-to-renaming and tie-breaking deterministic.
bool entry_before(const LabeledBlocks& a, const LabeledBlocks& b) {
    if (a.blocks != b.blocks)
        return std::lexicographical_compare(b.blocks.begin(), b.blocks.end(),
                                            a.blocks.begin(), a.blocks.end());
    return a.label < b.label;
}

int profile_size(const EigenBlockProfile& p) {
    int total = 0;
    for (const auto& e : p.entries)
        total += std::accumulate(e.blocks.begin(), e.blocks.end(), 0);
    return total;
}

bool is_central_profile(const EigenBlockProfile& p) {
    if (p.entries.size() != 1)
        return false;
    const auto& blocks = p.entries.front().blocks;
    return std::all_of(blocks.begin(), blocks.end(), [](int b) { return b == 1; });
}

} // namespace

ClassSpec make_class(int n, std::vector<LabeledBlocks> entries,
                     std::optional<OrderModCenter> order_mod_center,
                     std::map<std::string, std::string> concrete_values) {
    ClassSpec spec;
    spec.n = n;
    for (auto& e : entries)
        std::sort(e.blocks.begin(), e.blocks.end(), std::greater<int>());
    std::sort(entries.begin(), entries.end(), entry_before);
    spec.profile.entries = std::move(entries);
    spec.order_mod_center = order_mod_center;
    spec.concrete_values = std::move(concrete_values);
    validate(spec);
    return spec;
}

void validate(const ClassSpec& spec) {
    if (spec.n < 2)
        throw std::invalid_argument("class dimension must be at least 2");
    if (spec.profile.entries.empty())
        throw std::invalid_argument("profile has no eigenvalue entries");
    for (const auto& e : spec.profile.entries) {
        if (e.blocks.empty())
            throw std::invalid_argument("empty block partition for label '" + e.label + "'");
        for (size_t i = 0; i < e.blocks.size(); ++i) {
            if (e.blocks[i] < 1)
                throw std::invalid_argument("block sizes must be positive");
            if (i > 0 && e.blocks[i] > e.blocks[i - 1])
                throw std::invalid_argument("blocks must be non-increasing");
        }
    }
    for (size_t i = 0; i + 1 < spec.profile.entries.size(); ++i)
        for (size_t j = i + 1; j < spec.profile.entries.size(); ++j)
            if (spec.profile.entries[i].label == spec.profile.entries[j].label)
                throw std::invalid_argument("duplicate eigenvalue label '" +
                                            spec.profile.entries[i].label + "'");
    if (profile_size(spec.profile) != spec.n)
        throw std::invalid_argument("block sizes sum to " +
                                    std::to_string(profile_size(spec.profile)) +
                                    ", expected n = " + std::to_string(spec.n));
    if (is_central_profile(spec.profile))
        throw std::invalid_argument("central class (single eigenvalue, all blocks size 1)");
}

ClassTuple make_tuple(std::vector<ClassSpec> classes) {
    ClassTuple t;
    t.classes = std::move(classes);
    validate(t);
    return t;
}

void validate(const ClassTuple& tuple) {
    if (tuple.classes.empty())
        throw std::invalid_argument("tuple has no classes");
    for (const auto& c : tuple.classes)
        validate(c);
    for (const auto& c : tuple.classes)
        if (c.n != tuple.classes.front().n)
            throw std::invalid_argument("all classes in a tuple must share n");
}

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::Generating: return "Generating";
    case Outcome::EigenspaceObstruction: return "EigenspaceObstruction";
    case Outcome::QuadraticPairObstruction: return "QuadraticPairObstruction";
    case Outcome::SL2InvolutionObstruction: return "SL2InvolutionObstruction";
    }
    return "?";
}

int gamma(const ClassSpec& spec) {
    validate(spec);
    size_t best = 0;
    for (const auto& e : spec.profile.entries)
        best = std::max(best, e.blocks.size());
    return static_cast<int>(best);
}

int minimal_polynomial_degree(const ClassSpec& spec) {
    validate(spec);
    int deg = 0;
    for (const auto& e : spec.profile.entries)
        deg += e.blocks.front();
    return deg;
}

bool is_quadratic(const ClassSpec& spec) {
    return minimal_polynomial_degree(spec) == 2;
}

int centralizer_dimension(const ClassSpec& spec) {
    validate(spec);
    int total = 0;
    for (const auto& e : spec.profile.entries) {
        // transpose partition: mu_j = #blocks of size > j
        const int largest = e.blocks.front();
        for (int j = 0; j < largest; ++j) {
            int mu = 0;
            for (int b : e.blocks)
                if (b > j)
                    ++mu;
            total += mu * mu;
        }
    }
    return total - 1;
}

int class_dimension(const ClassSpec& spec) {
    return spec.n * spec.n - 1 - centralizer_dimension(spec);
}

int dim_omega(const ClassTuple& tuple) {
    validate(tuple);
    int total = 0;
    for (const auto& c : tuple.classes)
        total += class_dimension(c);
    return total;
}

Verdict generation_criterion(const ClassTuple& tuple) {
    validate(tuple);
    const int n = tuple.n();
    const int e = tuple.e();

    if (n == 2) {
        if (e != 2)
            throw std::invalid_argument(
                "the n = 2 criterion is only stated for pairs (e = 2), got e = " +
                std::to_string(e));
        bool all_involutions = true;
        for (const auto& c : tuple.classes) {
            if (!c.order_mod_center)
                throw std::invalid_argument(
                    "n = 2 classes need an order_mod_center annotation "
                    "(involution | other)");
            all_involutions &= (*c.order_mod_center == OrderModCenter::Involution);
        }
        if (all_involutions)
            return {Outcome::SL2InvolutionObstruction, std::nullopt};
        return {Outcome::Generating, std::nullopt};
    }

    long long gamma_sum = 0;
    for (const auto& c : tuple.classes)
        gamma_sum += gamma(c);
    const long long bound = static_cast<long long>(n) * (e - 1);
    if (gamma_sum > bound)
        return {Outcome::EigenspaceObstruction, static_cast<int>(gamma_sum - bound)};
    if (e == 2 && is_quadratic(tuple.classes[0]) && is_quadratic(tuple.classes[1]))
        return {Outcome::QuadraticPairObstruction, std::nullopt};
    return {Outcome::Generating, std::nullopt};
}

int min_generators(const ClassSpec& spec) {
    validate(spec);
    if (spec.n < 3)
        throw std::invalid_argument("min_generators requires n >= 3");
    const int n = spec.n;
    const int g = gamma(spec);
    int d0 = (n + (n - g) - 1) / (n - g); // ceil(n / (n - gamma))
    if (d0 < 2)
        d0 = 2;
    if (d0 == 2 && is_quadratic(spec))
        return 3;
    return d0;
}

ClassTuple restrict_tuple(const ClassTuple& tuple) {
    validate(tuple);
    if (tuple.n() < 3)
        throw std::invalid_argument("restriction needs n >= 3");
    Verdict v = generation_criterion(tuple);
    if (!v.generating())
        throw std::invalid_argument(
            std::string("restriction requires a tuple satisfying the generation "
                        "criterion; got ") +
            to_string(v.outcome));

    std::vector<ClassSpec> out;
    out.reserve(tuple.classes.size());
    for (size_t ci = 0; ci < tuple.classes.size(); ++ci) {
        const ClassSpec& c = tuple.classes[ci];
        const int g = gamma(c);
        std::vector<LabeledBlocks> entries = c.profile.entries;
        // first entry attaining gamma, in canonical order
        size_t pick = 0;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (static_cast<int>(entries[i].blocks.size()) == g) {
                pick = i;
                break;
            }
        }
        Partition& blocks = entries[pick].blocks;
        // smallest block is last (non-increasing order)
        if (blocks.back() == 1)
            blocks.pop_back();
        else
            blocks.back() -= 1;
        if (blocks.empty())
            entries.erase(entries.begin() + static_cast<long>(pick));

        if (entries.empty())
            throw std::runtime_error("restriction collapsed class " +
                                     std::to_string(ci + 1) + " entirely");
        // make_class revalidates; a central result fails loudly there
        try {
            out.push_back(make_class(c.n - 1, std::move(entries)));
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error("restriction made class " +
                                     std::to_string(ci + 1) +
                                     " degenerate: " + err.what());
        }
    }
    return make_tuple(std::move(out));
}

int eigenspace_intersection_lower_bound(const ClassTuple& tuple) {
    validate(tuple);
    long long gamma_sum = 0;
    for (const auto& c : tuple.classes)
        gamma_sum += gamma(c);
    long long t = gamma_sum - static_cast<long long>(tuple.n()) * (tuple.e() - 1);
    return t > 0 ? static_cast<int>(t) : 0;
}

namespace {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    // descending-lex-first order: largest first part first
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::string nth_label(size_t i) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i = i / 26;
    } while (i-- > 0);
    return s;
}

} // namespace

std::vector<ClassSpec> enumerate_shapes(int n, int max_labels) {
    if (n < 2)
        throw std::invalid_argument("enumeration needs n >= 2");
    if (n > kEnumerationCap)
        throw std::runtime_error("shape enumeration capped at n = " +
                                 std::to_string(kEnumerationCap));
    if (max_labels <= 0 || max_labels > n)
        max_labels = n;

    // Partitions of every size <= n, ordered by (size desc, lex desc); a
    // multiset of partitions is enumerated as a non-ascending sequence in
    // this order, which makes each multiset appear exactly once.
    std::vector<Partition> pool;
    for (int s = n; s >= 1; --s)
        for (auto& p : partitions_of(s))
            pool.push_back(std::move(p));

    std::vector<std::vector<Partition>> found;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, size_t from, int rem) -> void {
        if (rem == 0) {
            found.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_labels)
            return;
        for (size_t i = from; i < pool.size(); ++i) {
            int sz = std::accumulate(pool[i].begin(), pool[i].end(), 0);
            if (sz > rem)
                continue;
            cur.push_back(pool[i]);
            self(self, i, rem - sz);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);

    // canonical entry order inside each shape, then canonical listing
    // order: fewer labels first, then entries desc-lex
    for (auto& parts : found)
        std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
            return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
        });
    std::stable_sort(found.begin(), found.end(),
                     [](const std::vector<Partition>& a, const std::vector<Partition>& b) {
                         if (a.size() != b.size())
                             return a.size() < b.size();
                         return std::lexicographical_compare(
                             b.begin(), b.end(), a.begin(), a.end());
                     });

    std::vector<ClassSpec> shapes;
    shapes.reserve(found.size());
    for (const auto& parts : found) {
        if (parts.size() == 1 &&
            std::all_of(parts[0].begin(), parts[0].end(), [](int b) { return b == 1; }))
            continue; // central
        std::vector<LabeledBlocks> entries;
        for (size_t i = 0; i < parts.size(); ++i)
            entries.push_back({nth_label(i), parts[i]});
        shapes.push_back(make_class(n, std::move(entries)));
    }
    return shapes;
}

std::string to_string(const ClassSpec& spec) {
    std::string s;
    for (size_t i = 0; i < spec.profile.entries.size(); ++i) {
        const auto& e = spec.profile.entries[i];
        if (i)
            s += ' ';
        s += e.label + ":[";
        for (size_t j = 0; j < e.blocks.size(); ++j) {
            if (j)
                s += ',';
            s += std::to_string(e.blocks[j]);
        }
        s += ']';
    }
    return s;
}

} // namespace topgen::classdata
