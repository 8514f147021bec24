#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

// Box in a Young diagram. i is the column index, j the row index; the
// bottom-left box of a nonempty diagram is (0,0) and the box (i,j) is
// identified with the monomial q^i t^j.
struct BoxCoord {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

struct ArmLeg {
    int arm = 0;  // boxes strictly to the right in the same row
    int leg = 0;  // boxes strictly above in the same column

    friend auto operator<=>(const ArmLeg&, const ArmLeg&) = default;
};

// Partition stored as non-increasing column lengths. The empty partition is
// the empty vector.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const;  // total number of boxes

    // Column length, 1-based to match the usual lambda_i notation;
    // out-of-range columns have length 0.
    int part(int i) const;

    bool contains(BoxCoord b) const;
    std::vector<BoxCoord> boxes() const;  // row-major, top row first

    ArmLeg arm_leg(BoxCoord b) const;  // throws if b is outside the diagram

    // Boxes with arm = leg = 0, ordered from the uppermost to the lowest
    // (strictly decreasing row index).
    std::vector<BoxCoord> corners() const;

    // All ways of growing the diagram by one box, with the added box.
    std::vector<std::pair<Partition, BoxCoord>> add_box_set() const;

    // Drops the first column; throws on the empty partition.
    Partition remove_first_column() const;

    // Removes a corner box; throws if c is not a corner.
    Partition remove_corner(BoxCoord c) const;

    // Canonical text form "3,1" ("" for the empty partition).
    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

// All partitions of n in lexicographically decreasing order;
// enumerate_partitions(0) = { empty }.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace hilb
