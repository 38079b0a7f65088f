#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace superharm {

/// A permutation of {1, ..., s} in one-line notation: images[i - 1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int s);
    /// "312" or "3,1,2" style one-line notation.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Number of pairs i < j with sigma(i) > sigma(j).
    int inversions() const;
    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
    std::string to_string() const;

    /// (tau * sigma)(i) = tau(sigma(i)).
    friend Permutation operator*(const Permutation& tau, const Permutation& sigma);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// All permutations of {1..s} in lexicographic order of their one-line words.
std::vector<Permutation> all_permutations(int s);

/// Inversion count of an arbitrary integer sequence.
int count_inversions(const std::vector<int>& seq);

/// Sign of prod_{v < w} (seq[w] - seq[v]): +1, -1, or 0 when entries repeat.
int vandermonde_sign(const std::vector<int>& seq);

}  // namespace superharm
