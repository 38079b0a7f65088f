#include "superharm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superharm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[v])
            throw std::invalid_argument("Permutation: not a permutation of 1..s");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int s) {
    std::vector<int> im(s);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> im;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            std::string tok(text.substr(pos, next - pos));
            if (tok.empty()) throw std::invalid_argument("Permutation::parse: empty entry");
            im.push_back(std::stoi(tok));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("Permutation::parse: bad digit");
            im.push_back(c - '0');
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::inversions() const { return count_inversions(images_); }

std::string Permutation::to_string() const {
    std::string out;
    bool wide = size() >= 10;
    for (int i = 0; i < size(); ++i) {
        if (wide && i > 0) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

Permutation operator*(const Permutation& tau, const Permutation& sigma) {
    if (tau.size() != sigma.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> im(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i) im[i - 1] = tau(sigma(i));
    return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int s) {
    std::vector<int> im(s);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

int count_inversions(const std::vector<int>& seq) {
    int c = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++c;
    return c;
}

int vandermonde_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    }
    return sign;
}

}  // namespace superharm
