#pragma once

#include <string>
#include <vector>

namespace gyro {

// A bijection on {0..n-1}.  Carrier for gyroautomorphisms and graph
// automorphisms.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;

    // (a.then(b))(x) == b(a(x))
    Permutation then(const Permutation& next) const;

    // Cycle notation, fixed points omitted: "(1 6)(2 5)"; identity -> "id".
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> image_;
};

}  // namespace gyro
