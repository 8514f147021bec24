#include "hilb/partition.hpp"

#include <algorithm>
#include <numeric>

namespace hilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

bool Partition::contains(BoxCoord b) const {
    return b.i >= 0 && b.j >= 0 && b.i < length() && b.j < parts_[b.i];
}

std::vector<BoxCoord> Partition::boxes() const {
    std::vector<BoxCoord> out;
    out.reserve(size());
    int top = parts_.empty() ? 0 : parts_[0];
    for (int j = top - 1; j >= 0; --j)
        for (int i = 0; i < length() && parts_[i] > j; ++i)
            out.push_back({i, j});
    return out;
}

ArmLeg Partition::arm_leg(BoxCoord b) const {
    if (!contains(b)) throw std::domain_error("box outside Young diagram");
    int arm = 0;
    for (int i = b.i + 1; i < length() && parts_[i] > b.j; ++i) ++arm;
    int leg = parts_[b.i] - 1 - b.j;
    return {arm, leg};
}

std::vector<BoxCoord> Partition::corners() const {
    std::vector<BoxCoord> out;
    for (int i = 0; i < length(); ++i) {
        int next = (i + 1 < length()) ? parts_[i + 1] : 0;
        if (parts_[i] > next) out.push_back({i, parts_[i] - 1});
    }
    return out;
}

std::vector<std::pair<Partition, BoxCoord>> Partition::add_box_set() const {
    std::vector<std::pair<Partition, BoxCoord>> out;
    for (int i = 0; i < length(); ++i) {
        if (i > 0 && parts_[i - 1] == parts_[i]) continue;
        auto grown = parts_;
        ++grown[i];
        out.emplace_back(Partition(std::move(grown)), BoxCoord{i, parts_[i]});
    }
    auto grown = parts_;
    grown.push_back(1);
    out.emplace_back(Partition(std::move(grown)), BoxCoord{length(), 0});
    return out;
}

Partition Partition::remove_first_column() const {
    if (empty()) throw std::domain_error("cannot remove column of empty partition");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::remove_corner(BoxCoord c) const {
    auto cs = corners();
    if (std::find(cs.begin(), cs.end(), c) == cs.end())
        throw std::domain_error("box is not a corner");
    auto shrunk = parts_;
    if (--shrunk[c.i] == 0) shrunk.erase(shrunk.begin() + c.i);
    return Partition(std::move(shrunk));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts_[k]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate_rec(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(n, n, stack, out);
    return out;
}

}  // namespace hilb
