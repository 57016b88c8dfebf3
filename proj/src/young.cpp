#include "sod/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sod {

namespace {

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        }
        catch (const std::exception&) {
            throw InputError("malformed weight entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            throw InputError("malformed weight entry '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::string join_int_list(const std::vector<int>& parts)
{
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

void require_nonincreasing(const std::vector<int>& parts, const char* what)
{
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw InputError(std::string(what) + " must be nonincreasing: " + join_int_list(parts));
}

}  // namespace

i64 binomial(i64 n, i64 k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i)
        r = checked_mul(r, n - k + i) / i;
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    require_nonincreasing(parts_, "partition");
    if (!parts_.empty() && parts_.back() < 0)
        throw InputError("partition parts must be nonnegative: " + join_int_list(parts_));
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::parse(const std::string& text)
{
    return Partition(parse_int_list(text));
}

i64 Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), i64{0});
}

std::string Partition::to_string() const
{
    return join_int_list(parts_);
}

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts))
{
    require_nonincreasing(parts_, "weight");
}

Weight Weight::parse(const std::string& text, int rank)
{
    std::vector<int> parts = parse_int_list(text);
    if (static_cast<int>(parts.size()) > rank)
        throw InputError("weight '" + text + "' has more than " + std::to_string(rank) + " parts");
    if (static_cast<int>(parts.size()) < rank && !parts.empty() && parts.back() < 0)
        throw InputError("weight '" + text + "' ends in a negative part; write all " +
                         std::to_string(rank) + " parts explicitly");
    parts.resize(static_cast<size_t>(rank), 0);
    return Weight(std::move(parts));
}

Weight Weight::from_partition(const Partition& p, int rank)
{
    if (p.rows() > rank)
        throw InputError("diagram " + p.to_string() + " does not fit in rank " + std::to_string(rank));
    std::vector<int> parts(p.parts());
    parts.resize(static_cast<size_t>(rank), 0);
    return Weight(std::move(parts));
}

Weight Weight::zero(int rank)
{
    return Weight(std::vector<int>(static_cast<size_t>(rank), 0));
}

i64 Weight::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), i64{0});
}

Partition Weight::to_partition() const
{
    if (!parts_.empty() && parts_.back() < 0)
        throw InputError("weight " + to_string() + " is not a diagram");
    return Partition(parts_);
}

std::string Weight::to_string() const
{
    return join_int_list(parts_);
}

Partition transpose(const Partition& p)
{
    if (p.empty())
        return Partition{};
    std::vector<int> cols(static_cast<size_t>(p.part(0)), 0);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

bool contains(const Partition& lambda, const Partition& mu)
{
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i))
            return false;
    return true;
}

bool box_order_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a.parts() < b.parts();
}

int Box::index_of(const Partition& p) const
{
    for (int i = 0; i < size(); ++i)
        if (members[static_cast<size_t>(i)] == p)
            return i;
    return -1;
}

namespace {

void collect_bounded(std::vector<int>& row_buf, int rows_left, int max_part,
                     std::vector<Partition>& out)
{
    out.emplace_back(std::vector<int>(row_buf));
    if (rows_left == 0)
        return;
    for (int v = 1; v <= max_part; ++v) {
        row_buf.push_back(v);
        collect_bounded(row_buf, rows_left - 1, v, out);
        row_buf.pop_back();
    }
}

}  // namespace

Box enumerate_box(int k, int w)
{
    if (k < 1 || w < 0)
        throw InputError("box requires k >= 1 and w >= 0");
    Box box;
    box.k = k;
    box.w = w;
    std::vector<int> buf;
    collect_bounded(buf, k, w, box.members);
    std::sort(box.members.begin(), box.members.end(), box_order_less);
    return box;
}

std::vector<Partition> exactly_k_rows_subset(const Box& box)
{
    std::vector<Partition> out;
    for (const Partition& p : box.members)
        if (p.rows() == box.k)
            out.push_back(p);
    return out;
}

std::vector<Partition> sub_diagrams(const Partition& lambda)
{
    std::vector<Partition> out;
    std::vector<int> buf;
    const auto rec = [&](auto&& self, int row, int prev) -> void {
        out.emplace_back(std::vector<int>(buf));
        if (row == lambda.rows())
            return;
        int hi = std::min(prev, lambda.part(row));
        for (int v = 1; v <= hi; ++v) {
            buf.push_back(v);
            self(self, row + 1, v);
            buf.pop_back();
        }
    };
    rec(rec, 0, lambda.part(0));
    std::sort(out.begin(), out.end(), box_order_less);
    return out;
}

Weight dual_weight(const Weight& a)
{
    std::vector<int> parts(a.parts().rbegin(), a.parts().rend());
    for (int& v : parts)
        v = -v;
    return Weight(std::move(parts));
}

Weight twist(const Weight& a, int c)
{
    std::vector<int> parts = a.parts();
    for (int& v : parts)
        v += c;
    return Weight(std::move(parts));
}

}  // namespace sod
