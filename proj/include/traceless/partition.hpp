#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace traceless {

/// A partition: weakly decreasing sequence of positive integers. The empty
/// sequence is the empty partition. Parts beyond the length read as 0.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        // trailing zeros are tolerated on input and stripped
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        validate();
    }

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;                      // |alpha|, the number of boxes
    bool empty() const { return parts_.empty(); }
    int part(int i) const {                // 1-based; 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

    std::string str() const;               // "(4,2,1)", "()" for empty

  private:
    void validate() const;
    std::vector<int> parts_;
};

struct SkewShape {
    Partition outer;
    Partition inner;    // must be contained in outer
};

/// Pair (mu, nu) indexing a rational irreducible; membership in Lambda(N)
/// additionally requires len(mu) + len(nu) <= N, checked by in_lambda.
struct RationalLabel {
    Partition mu;
    Partition nu;
    auto operator<=>(const RationalLabel&) const = default;
};

/// Equivalence class [alpha, t] of pairs (partition, determinant power),
/// stored as the minimal representative for a fixed capacity N.
class StaircaseClass {
  public:
    StaircaseClass(Partition alpha, int t, int capacity);

    const Partition& alpha() const { return alpha_; }
    int t() const { return t_; }
    int capacity() const { return capacity_; }

    bool operator==(const StaircaseClass& o) const {
        return capacity_ == o.capacity_ && t_ == o.t_ && alpha_ == o.alpha_;
    }

  private:
    Partition alpha_;
    int t_;
    int capacity_;
};

Partition dual(const Partition& p);
long content(const Partition& p);
long skew_content(const SkewShape& s);

Partition add(const Partition& a, const Partition& b);
Partition intersect(const Partition& a, const Partition& b);
bool contains(const Partition& a, const Partition& b);   // b subset of a, cellwise

bool in_lambda(const RationalLabel& l, int capacity);

/// Complement of p inside the (p_1 columns) x N box, rotated by 180 degrees.
/// Requires len(p) <= N.
Partition bar(const Partition& p, int capacity);

StaircaseClass staircase(const Partition& mu, const Partition& nu, int capacity);
RationalLabel staircase_inverse(const StaircaseClass& cls);

/// All partitions of s with at most maxLen parts, ordered lexicographically
/// ascending on the part sequence (the order enumerations are frozen to).
std::vector<Partition> enumerate_partitions(int s, int maxLen);

/// All (mu, nu) with |mu| = m-r, |nu| = n-r, len(mu)+len(nu) <= capacity.
std::vector<RationalLabel> enumerate_lambda(int m, int n, int r, int capacity);

Partition parse_partition(const std::string& text);   // "2,1"; "-" is empty

}  // namespace traceless
