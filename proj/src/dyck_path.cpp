#include "ecodyck/dyck_path.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include <omp.h>

namespace ecodyck {

namespace {

bool is_dyck(std::span<const Step> steps)
{
    long h = 0;
    for (Step s : steps) {
        h += (s == Step::up) ? 1 : -1;
        if (h < 0) return false;
    }
    return h == 0;
}

std::size_t area_of(std::span<const Step> steps)
{
    std::size_t h = 0, a = 0;
    for (Step s : steps) {
        if (s == Step::up) ++h; else --h;
        a += h;
    }
    return a;
}

void require_same_length(const DyckPath& p, const DyckPath& q)
{
    if (p.length() != q.length())
        throw std::invalid_argument("Dyck paths of different semilength: " + p.str() + " vs " + q.str());
}

// Depth-first walk of the generating tree below `buf` (a path of semilength
// `m` whose last descent has length `k`). The tail of `buf` is rewritten in
// place for each son and restored afterwards.
template <class Visit>
void descend(std::vector<Step>& buf, std::size_t m, std::size_t k, std::size_t target, Visit& visit)
{
    if (m == target) {
        visit(std::span<const Step>(buf));
        return;
    }
    const std::size_t len = buf.size();
    const std::size_t base = len - k;  // first step of the last descent
    buf.resize(len + 2);
    for (std::size_t h = 0; h <= k; ++h) {
        // son_h = A D^{k-h} U D^{h+1}
        std::size_t i = base;
        for (std::size_t j = 0; j < k - h; ++j) buf[i++] = Step::down;
        buf[i++] = Step::up;
        for (std::size_t j = 0; j <= h; ++j) buf[i++] = Step::down;
        descend(buf, m + 1, h + 1, target, visit);
    }
    buf.resize(len);
    std::fill(buf.begin() + static_cast<std::ptrdiff_t>(base), buf.end(), Step::down);
}

} // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps))
{
    if (!is_dyck(steps_)) throw std::invalid_argument("not a Dyck path: " + str());
}

DyckPath DyckPath::parse(std::string_view text)
{
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'U': steps.push_back(Step::up); break;
        case 'D': steps.push_back(Step::down); break;
        default:
            throw std::invalid_argument("invalid step character '" + std::string(1, c) + "' in path literal");
        }
    }
    return DyckPath(std::move(steps));
}

DyckPath DyckPath::zigzag(std::size_t n)
{
    std::vector<Step> s;
    s.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(Step::up);
        s.push_back(Step::down);
    }
    return DyckPath(std::move(s), Unchecked{});
}

DyckPath DyckPath::pyramid(std::size_t n)
{
    std::vector<Step> s(2 * n, Step::down);
    std::fill_n(s.begin(), n, Step::up);
    return DyckPath(std::move(s), Unchecked{});
}

std::vector<int> DyckPath::heights() const
{
    std::vector<int> y;
    y.reserve(steps_.size());
    int h = 0;
    for (Step s : steps_) {
        h += (s == Step::up) ? 1 : -1;
        y.push_back(h);
    }
    return y;
}

std::string DyckPath::str() const
{
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(st == Step::up ? 'U' : 'D');
    return s;
}

DyckPath from_heights(std::span<const int> heights)
{
    std::vector<Step> s;
    s.reserve(heights.size());
    int prev = 0;
    for (int y : heights) {
        if (y == prev + 1) s.push_back(Step::up);
        else if (y == prev - 1) s.push_back(Step::down);
        else throw std::invalid_argument("height profile jumps by more than one");
        prev = y;
    }
    return DyckPath(std::move(s));
}

std::size_t area(const DyckPath& p) { return area_of(p.steps()); }

std::size_t rank(const DyckPath& p) { return (area(p) - p.semilength()) / 2; }

std::size_t last_descent_length(const DyckPath& p)
{
    auto steps = p.steps();
    std::size_t k = 0;
    for (auto it = steps.rbegin(); it != steps.rend() && *it == Step::down; ++it) ++k;
    return k;
}

std::vector<DyckPath> eco_sons(const DyckPath& p)
{
    if (p.empty()) throw std::invalid_argument("the empty path has no last descent and no sons");
    const std::size_t k = last_descent_length(p);
    const std::size_t base = p.length() - k;
    std::vector<DyckPath> sons;
    sons.reserve(k + 1);
    for (std::size_t h = 0; h <= k; ++h) {
        std::vector<Step> s(p.steps_.begin(), p.steps_.begin() + static_cast<std::ptrdiff_t>(base));
        s.insert(s.end(), k - h, Step::down);
        s.push_back(Step::up);
        s.insert(s.end(), h + 1, Step::down);
        sons.push_back(DyckPath(std::move(s), DyckPath::Unchecked{}));
    }
    return sons;
}

DyckPath eco_parent(const DyckPath& p)
{
    if (p.semilength() < 2) throw std::invalid_argument("eco_parent requires semilength >= 2");
    const auto& s = p.steps_;
    std::size_t i = s.size();
    while (s[i - 1] != Step::up) --i;
    std::vector<Step> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i - 1));
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1), s.end());
    return DyckPath(std::move(out), DyckPath::Unchecked{});
}

void EnumerationGuard::require(const BigInt& count, std::string_view what) const
{
    if (count > BigInt(static_cast<unsigned long>(max_objects))) {
        throw GuardExceeded(std::string(what) + " needs " + count.get_str() +
                            " objects, above the enumeration guard of " + std::to_string(max_objects));
    }
}

std::vector<DyckPath> enumerate(std::size_t n, const EnumerationGuard& guard)
{
    if (n == 0) throw std::invalid_argument("enumerate requires semilength n >= 1");
    guard.require(catalan(n), "enumerating D_" + std::to_string(n));
    std::vector<DyckPath> level{DyckPath::zigzag(1)};
    for (std::size_t m = 1; m < n; ++m) {
        std::vector<DyckPath> next;
        for (const auto& p : level) {
            auto sons = eco_sons(p);
            std::move(sons.begin(), sons.end(), std::back_inserter(next));
        }
        level = std::move(next);
    }
    return level;
}

void for_each_path(std::size_t n, const std::function<void(std::span<const Step>)>& visit,
                   const EnumerationGuard& guard)
{
    if (n == 0) throw std::invalid_argument("for_each_path requires semilength n >= 1");
    guard.require(catalan(n), "visiting D_" + std::to_string(n));
    std::vector<Step> buf{Step::up, Step::down};
    buf.reserve(2 * n);
    descend(buf, 1, 1, n, visit);
}

std::vector<std::uint64_t> rank_histogram_serial(std::size_t n, const EnumerationGuard& guard)
{
    std::vector<std::uint64_t> hist(choose2(n) + 1, 0);
    for (const auto& p : enumerate(n, guard)) ++hist[rank(p)];
    return hist;
}

std::vector<std::uint64_t> rank_histogram(std::size_t n, const EnumerationGuard& guard)
{
    if (n == 0) throw std::invalid_argument("rank_histogram requires semilength n >= 1");
    guard.require(catalan(n), "rank histogram of D_" + std::to_string(n));

    // Roots of the parallel subtrees: a whole generating-tree level.
    const std::size_t root_level = std::min<std::size_t>(n, 7);
    const std::vector<DyckPath> roots = enumerate(root_level, guard);
    const std::size_t width = choose2(n) + 1;
    std::vector<std::uint64_t> hist(width, 0);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(width, 0);
        std::vector<Step> buf;
        buf.reserve(2 * n);
        auto visit = [&](std::span<const Step> steps) { ++local[(area_of(steps) - n) / 2]; };

#pragma omp for schedule(dynamic)
        for (std::size_t r = 0; r < roots.size(); ++r) {
            buf.assign(roots[r].steps().begin(), roots[r].steps().end());
            descend(buf, root_level, last_descent_length(roots[r]), n, visit);
        }

#pragma omp critical
        for (std::size_t i = 0; i < width; ++i) hist[i] += local[i];
    }
    return hist;
}

bool leq(const DyckPath& p, const DyckPath& q)
{
    require_same_length(p, q);
    const auto yp = p.heights(), yq = q.heights();
    for (std::size_t i = 0; i < yp.size(); ++i)
        if (yp[i] > yq[i]) return false;
    return true;
}

DyckPath meet(const DyckPath& p, const DyckPath& q)
{
    require_same_length(p, q);
    auto y = p.heights();
    const auto yq = q.heights();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::min(y[i], yq[i]);
    return from_heights(y);
}

DyckPath join(const DyckPath& p, const DyckPath& q)
{
    require_same_length(p, q);
    auto y = p.heights();
    const auto yq = q.heights();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::max(y[i], yq[i]);
    return from_heights(y);
}

std::size_t Partition::size() const noexcept
{
    std::size_t s = 0;
    for (auto v : parts) s += v;
    return s;
}

Partition to_young(const DyckPath& p)
{
    // downs_before[i] = number of D steps preceding the (i+1)-th U step.
    std::vector<std::size_t> downs_before;
    std::size_t downs = 0;
    for (Step s : p.steps()) {
        if (s == Step::up) downs_before.push_back(downs);
        else ++downs;
    }
    Partition lambda;
    for (auto it = downs_before.rbegin(); it != downs_before.rend() && *it > 0; ++it)
        lambda.parts.push_back(*it);
    return lambda;
}

DyckPath from_young(std::size_t n, const Partition& lambda)
{
    const auto& parts = lambda.parts;
    if (n == 0) {
        if (!parts.empty()) throw std::invalid_argument("only the empty partition fits the empty staircase");
        return {};
    }
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (parts[r] == 0) throw std::invalid_argument("partition parts must be positive");
        if (r > 0 && parts[r] > parts[r - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        // 1-indexed row r+1 of the staircase has n-(r+1) cells
        if (r + 1 >= n || parts[r] > n - (r + 1))
            throw std::invalid_argument("partition does not fit the staircase of semilength " + std::to_string(n));
    }
    std::vector<Step> s;
    s.reserve(2 * n);
    std::size_t emitted = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        // the i-th U is preceded by part (n+1-i) downs
        const std::size_t row = n + 1 - i;
        const std::size_t want = row <= parts.size() ? parts[row - 1] : 0;
        s.insert(s.end(), want - emitted, Step::down);
        emitted = want;
        s.push_back(Step::up);
    }
    s.insert(s.end(), n - emitted, Step::down);
    return DyckPath(std::move(s));
}

} // namespace ecodyck
