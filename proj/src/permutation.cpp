#include "gyro/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gyro/errors.hpp"

namespace gyro {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= size() || seen[v])
            throw argument_error("permutation image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
    if (next.size() != size()) throw argument_error("permutation size mismatch");
    std::vector<int> img(image_.size());
    for (int i = 0; i < size(); ++i) img[i] = next(image_[i]);
    return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || image_[i] == i) continue;
        out += '(';
        int x = i;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = image_[x];
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

}  // namespace gyro
