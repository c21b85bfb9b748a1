#include "traceless/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace traceless {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition dual(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> d(p.part(1), 0);
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= p.length(); ++i)
            if (p.part(i) >= j) ++count;
        d[j - 1] = count;
    }
    return Partition(std::move(d));
}

long content(const Partition& p) {
    long c = 0;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) c += j - i;
    return c;
}

long skew_content(const SkewShape& s) {
    if (!contains(s.outer, s.inner)) throw std::invalid_argument("skew shape: inner not inside outer");
    return content(s.outer) - content(s.inner);
}

Partition add(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition intersect(const Partition& a, const Partition& b) {
    int len = std::min(a.length(), b.length());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = std::min(a.part(i), b.part(i));
    return Partition(std::move(parts));
}

bool contains(const Partition& a, const Partition& b) {
    for (int i = 1; i <= b.length(); ++i)
        if (b.part(i) > a.part(i)) return false;
    return true;
}

bool in_lambda(const RationalLabel& l, int capacity) {
    return l.mu.length() + l.nu.length() <= capacity;
}

Partition bar(const Partition& p, int capacity) {
    if (capacity < 1) throw std::invalid_argument("bar: capacity must be positive");
    if (p.empty()) return {};
    if (p.length() > capacity) throw std::invalid_argument("bar: partition has more than N parts");
    Partition d = dual(p);
    int q = d.length();  // = p.part(1)
    std::vector<int> complement;
    complement.reserve(q);
    for (int i = q; i >= 1; --i) {
        int v = capacity - d.part(i);
        if (v > 0) complement.push_back(v);
    }
    return dual(Partition(std::move(complement)));
}

StaircaseClass::StaircaseClass(Partition alpha, int t, int capacity)
    : alpha_(std::move(alpha)), t_(t), capacity_(capacity) {
    if (capacity_ < 1) throw std::invalid_argument("staircase class: capacity must be positive");
    if (t_ < 0) throw std::invalid_argument("staircase class: t must be non-negative");
    if (alpha_.length() > capacity_)
        throw std::invalid_argument("staircase class: partition has more than N parts");
    // Reduce to the minimal representative: while t > 0 and alpha has a full
    // column of height N, remove that column and decrement t.
    while (t_ > 0 && alpha_.length() == capacity_) {
        std::vector<int> parts;
        for (int i = 1; i <= alpha_.length(); ++i)
            if (alpha_.part(i) - 1 > 0) parts.push_back(alpha_.part(i) - 1);
        alpha_ = Partition(std::move(parts));
        --t_;
    }
}

StaircaseClass staircase(const Partition& mu, const Partition& nu, int capacity) {
    if (mu.length() + nu.length() > capacity)
        throw std::invalid_argument("staircase: len(mu)+len(nu) exceeds N");
    return StaircaseClass(add(mu, bar(nu, capacity)), nu.part(1), capacity);
}

RationalLabel staircase_inverse(const StaircaseClass& cls) {
    const Partition& alpha = cls.alpha();
    const int t = cls.t();
    const int N = cls.capacity();
    if (t == 0) return {alpha, {}};

    // Minimal representative with t >= 1, hence alpha_N = 0.
    if (t >= alpha.part(1)) {
        std::vector<int> nu;
        for (int i = N; i >= 1; --i) {
            int v = t - alpha.part(i);
            if (v > 0) nu.push_back(v);
        }
        return {{}, Partition(std::move(nu))};
    }

    int p = 0;
    for (int i = 1; i <= N - 1; ++i)
        if (alpha.part(i) > t) p = i;
    std::vector<int> mu;
    for (int i = 1; i <= p; ++i) mu.push_back(alpha.part(i) - t);

    int q = 0;
    for (int i = p + 1; i <= N; ++i)
        if (alpha.part(i) < t) {
            q = i;
            break;
        }
    std::vector<int> nu;
    for (int i = N; i >= q; --i) nu.push_back(t - alpha.part(i));
    return {Partition(std::move(mu)), Partition(std::move(nu))};
}

namespace {
void enumerate_rec(int remaining, int maxLen, int minPart, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> parts(prefix.rbegin(), prefix.rend());
        out.push_back(Partition(std::move(parts)));
        return;
    }
    if (maxLen == 0) return;
    // Parts chosen smallest-first; the leaf reverses into a partition.
    for (int k = minPart; k <= remaining; ++k) {
        prefix.push_back(k);
        enumerate_rec(remaining - k, maxLen - 1, k, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int s, int maxLen) {
    if (s < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    if (s == 0) {
        out.push_back({});
        return out;
    }
    if (maxLen <= 0) return out;
    // Build smallest-part-first (ascending prefixes), emit reversed.
    std::vector<int> prefix;
    enumerate_rec(s, maxLen, 1, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalLabel> enumerate_lambda(int m, int n, int r, int capacity) {
    if (r < 0 || r > std::min(m, n)) throw std::invalid_argument("enumerate_lambda: bad r");
    if (capacity < 1) throw std::invalid_argument("enumerate_lambda: N must be positive");
    std::vector<RationalLabel> out;
    for (const Partition& mu : enumerate_partitions(m - r, std::min(m - r, capacity))) {
        int room = capacity - mu.length();
        if (room < 0) continue;
        if (n - r > 0 && room == 0) continue;
        for (const Partition& nu : enumerate_partitions(n - r, std::min(n - r, room)))
            out.push_back({mu, nu});
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition entry: '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("bad partition entry: '" + item + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace traceless
