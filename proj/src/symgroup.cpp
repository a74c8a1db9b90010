#include "symhodge/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symhodge {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int part : parts_) {
        if (part < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        n_ += part;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            throw std::invalid_argument("Partition::parse: empty component in '" + text + "'");
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("Partition::parse: bad component '" + token + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CycleType

CycleType CycleType::from_partition(const Partition& p) {
    CycleType c;
    for (int part : p.parts())
        ++c.mult_[part];
    c.n_ = p.n();
    return c;
}

Partition CycleType::to_partition() const {
    std::vector<int> parts;
    for (const auto& [j, a] : mult_)
        parts.insert(parts.end(), static_cast<std::size_t>(a), j);
    return Partition(std::move(parts));
}

int CycleType::count(int j) const {
    auto it = mult_.find(j);
    return it == mult_.end() ? 0 : it->second;
}

std::string CycleType::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, a] : mult_) {
        if (!first)
            os << ' ';
        os << j << '^' << a;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PermutationWord

PermutationWord::PermutationWord(std::vector<int> images) : images_(std::move(images)) {
    const int size = n();
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (int value : images_) {
        if (value < 1 || value > size || seen[static_cast<std::size_t>(value - 1)])
            throw std::invalid_argument("PermutationWord: not a permutation of {1.." +
                                        std::to_string(size) + "}");
        seen[static_cast<std::size_t>(value - 1)] = true;
    }
}

PermutationWord PermutationWord::identity(int n) {
    if (n < 0)
        throw std::invalid_argument("PermutationWord::identity: negative size");
    PermutationWord w;
    w.images_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w.images_[static_cast<std::size_t>(i)] = i + 1;
    return w;
}

PermutationWord PermutationWord::parse(const std::string& text) {
    std::size_t open = text.find('[');
    std::size_t close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("PermutationWord::parse: expected '[i,j,...]', got '" +
                                    text + "'");
    std::string body = text.substr(open + 1, close - open - 1);
    std::vector<int> images;
    if (!body.empty()) {
        std::istringstream in(body);
        std::string token;
        while (std::getline(in, token, ',')) {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size())
                throw std::invalid_argument("PermutationWord::parse: bad entry '" + token + "'");
            images.push_back(value);
        }
    }
    return PermutationWord(std::move(images));
}

PermutationWord PermutationWord::compose(const PermutationWord& other) const {
    if (n() != other.n())
        throw std::invalid_argument("PermutationWord::compose: size mismatch");
    PermutationWord out;
    out.images_.resize(images_.size());
    for (int i = 1; i <= n(); ++i)
        out.images_[static_cast<std::size_t>(i - 1)] = image(other.image(i));
    return out;
}

CycleType PermutationWord::cycle_type() const {
    std::vector<int> parts;
    std::vector<bool> visited(images_.size(), false);
    for (int start = 1; start <= n(); ++start) {
        if (visited[static_cast<std::size_t>(start - 1)])
            continue;
        int length = 0;
        int at = start;
        while (!visited[static_cast<std::size_t>(at - 1)]) {
            visited[static_cast<std::size_t>(at - 1)] = true;
            at = image(at);
            ++length;
        }
        parts.push_back(length);
    }
    return CycleType::from_partition(Partition(std::move(parts)));
}

std::string PermutationWord::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            os << ',';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration and class sizes

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

Int class_size(const CycleType& c) {
    Int denom = 1;
    for (const auto& [j, a] : c.mult()) {
        for (int i = 0; i < a; ++i)
            denom *= j;
        denom *= factorial(a);
    }
    // Always exact: the centralizer order divides n!.
    return factorial(c.n()) / denom;
}

// ---------------------------------------------------------------------------
// Determinant evaluation and exterior-power characters

TriPoly det_eval(const CycleType& c, const Monomial& w, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("det_eval: sign must be +1 or -1");
    TriPoly result = TriPoly::one();
    for (const auto& [j, a] : c.mult()) {
        // (-sign*w)^j carries the scalar (-sign)^j.
        const int scalar = (j % 2 == 0) ? 1 : -sign;
        TriPoly factor = TriPoly::one() - TriPoly(Int(scalar), w.pow(j));
        result *= factor.pow(a);
    }
    return result;
}

std::vector<Int> elementary_symmetric_profile(const CycleType& c) {
    const TriPoly expanded = det_eval(c, Monomial{1, 0, 0}, 1);
    std::vector<Int> profile(static_cast<std::size_t>(c.n()) + 1);
    for (const auto& [m, coeff] : expanded.terms())
        profile[static_cast<std::size_t>(m.k)] = coeff;
    return profile;
}

Int exterior_std_character(int k, const CycleType& c) {
    if (k < 0 || k >= c.n())
        throw std::invalid_argument("exterior_std_character: k must lie in [0, n-1], got k=" +
                                    std::to_string(k) + " with n=" + std::to_string(c.n()));
    const std::vector<Int> profile = elementary_symmetric_profile(c);
    Int value = 0;
    for (int i = k; i >= 0; --i) {
        if ((k - i) % 2 == 0)
            value += profile[static_cast<std::size_t>(i)];
        else
            value -= profile[static_cast<std::size_t>(i)];
    }
    return value;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

using ShapeKey = std::pair<std::vector<int>, std::vector<int>>;

// Border strips of length r correspond to beta numbers b with b - r >= 0 and
// b - r not already present; the strip height is the count of beta numbers
// strictly between b - r and b.
Int mn_recurse(const std::vector<int>& shape, const std::vector<int>& cycles,
               std::map<ShapeKey, Int>& memo) {
    if (shape.empty())
        return 1;
    ShapeKey key{shape, cycles};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int r = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int rows = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < rows; ++i)
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (rows - 1 - i);

    Int total = 0;
    for (int i = 0; i < rows; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0)
            continue;
        bool occupied = false;
        int height = 0;
        for (int other = 0; other < rows; ++other) {
            if (other == i)
                continue;
            const int ob = beta[static_cast<std::size_t>(other)];
            if (ob == target)
                occupied = true;
            if (ob > target && ob < b)
                ++height;
        }
        if (occupied)
            continue;
        std::vector<int> next_beta = beta;
        next_beta[static_cast<std::size_t>(i)] = target;
        std::sort(next_beta.begin(), next_beta.end(), std::greater<int>());
        std::vector<int> next_shape;
        for (int row = 0; row < rows; ++row) {
            const int part = next_beta[static_cast<std::size_t>(row)] - (rows - 1 - row);
            if (part > 0)
                next_shape.push_back(part);
        }
        const Int sub = mn_recurse(next_shape, rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const CycleType& c) {
    if (lambda.n() != c.n())
        throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.n()) +
                                    " does not match n = " + std::to_string(c.n()));
    thread_local std::map<ShapeKey, Int> memo;
    const std::vector<int> cycles = c.to_partition().parts();
    return mn_recurse(lambda.parts(), cycles, memo);
}

}  // namespace symhodge
