#include "youngbook/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace youngbook {

namespace {

std::string join(const std::vector<int>& parts, const char* sep = ",")
{
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << sep;
        out << parts[i];
    }
    return out.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            throw ShapeError("partition has a negative part");
        }
        if (parts[i] == 0) {
            throw ShapeError("partition has a zero part before a positive one");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw ShapeError("partition parts must be weakly decreasing: " + join(parts));
        }
    }
    parts_ = std::move(parts);
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const
{
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] == parts_[i - 1]) return false;
    }
    return true;
}

Partition Partition::rectangle(int value, int count)
{
    if (value <= 0 || count <= 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 0) {
            throw ArgumentError("composition parts must be nonnegative: " + join(parts_));
        }
        total_ += p;
    }
}

std::vector<Composition> Composition::all(int total, std::size_t length)
{
    std::vector<Composition> out;
    if (length == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current(length, 0);
    // Recursive fill of parts 0..length-2; the last part takes the remainder.
    auto fill = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == length) {
            current[pos] = remaining;
            out.emplace_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    fill(fill, 0, total);
    return out;
}

std::string to_string(PageKind kind)
{
    switch (kind) {
    case PageKind::ShiftedStaircase: return "shifted-staircase";
    case PageKind::Shifted: return "shifted";
    case PageKind::Nrs: return "nrs";
    case PageKind::NrsMinus: return "nrs-minus";
    case PageKind::Ars: return "ars";
    case PageKind::ArsMinus: return "ars-minus";
    case PageKind::Skew: return "skew";
    case PageKind::Truncated: return "truncated";
    }
    return "unknown";
}

std::string to_string(OrderKind kind)
{
    return kind == OrderKind::Young ? "young" : "selberg";
}

void PageShape::finalize()
{
    std::sort(cells_.begin(), cells_.end());
    rows_ = 0;
    cols_ = 0;
    for (const Cell& c : cells_) {
        rows_ = std::max(rows_, c.row);
        cols_ = std::max(cols_, c.col);
    }
    for (const DiagonalCell& d : diagonals_) {
        rows_ = std::max(rows_, d.last_row);
        cols_ = std::max(cols_, d.last_col);
    }
    grid_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), -1);
    auto put = [&](int row, int col, int id) {
        int& slot = grid_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
                          static_cast<std::size_t>(col - 1)];
        if (slot != -1) {
            throw ShapeError("overlapping cells at (" + std::to_string(row) + "," + std::to_string(col) + ")");
        }
        slot = id;
    };
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        const DiagonalCell& d = diagonals_[i];
        for (int row = d.first_row; row <= d.last_row; ++row) {
            for (int col = d.first_col; col <= d.last_col; ++col) {
                put(row, col, static_cast<int>(i));
            }
        }
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        put(cells_[i].row, cells_[i].col, element_of_cell(i));
    }
}

int PageShape::element_at(int row, int col) const
{
    if (row < 1 || col < 1 || row > rows_ || col > cols_) return -1;
    return grid_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(col - 1)];
}

std::vector<int> PageShape::diagonal_sizes() const
{
    std::vector<int> sizes;
    sizes.reserve(diagonals_.size());
    for (const DiagonalCell& d : diagonals_) sizes.push_back(d.col_span());
    return sizes;
}

bool PageShape::is_corner(Cell c) const
{
    return has_corner_ && c.row <= r_ && c.col > cols_ - s_;
}

std::size_t PageShape::corner_cell_count() const
{
    return has_corner_ ? static_cast<std::size_t>(r_) * static_cast<std::size_t>(s_) : 0;
}

bool PageShape::supports_selberg() const
{
    switch (kind_) {
    case PageKind::ShiftedStaircase:
    case PageKind::Nrs:
    case PageKind::NrsMinus:
    case PageKind::Ars:
    case PageKind::ArsMinus:
        return true;
    default:
        return false;
    }
}

std::string PageShape::describe() const
{
    return label_;
}

PageShape make_shifted_staircase(int n)
{
    if (n < 1) {
        throw ShapeError("shifted staircase needs n >= 1 (empty shape)");
    }
    PageShape page;
    page.kind_ = PageKind::ShiftedStaircase;
    for (int i = 1; i <= n; ++i) {
        page.diagonals_.push_back({i, i, i, i, i});
        for (int j = i + 1; j <= n; ++j) page.cells_.push_back({i, j});
    }
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    page.label_ = "shifted:" + join(parts);
    page.finalize();
    return page;
}

PageShape make_shifted(const Partition& strict)
{
    if (strict.length() == 0) {
        throw ShapeError("shifted shape needs at least one row (empty shape)");
    }
    if (!strict.is_strict()) {
        throw ShapeError("shifted shape needs a strict partition: " + join(strict.parts()));
    }
    int n = static_cast<int>(strict.length());
    bool staircase = true;
    for (int i = 0; i < n; ++i) staircase = staircase && strict.parts()[static_cast<std::size_t>(i)] == n - i;
    if (staircase) return make_shifted_staircase(n);

    PageShape page;
    page.kind_ = PageKind::Shifted;
    for (int i = 1; i <= n; ++i) {
        page.diagonals_.push_back({i, i, i, i, i});
        int len = strict.parts()[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j < i + len; ++j) page.cells_.push_back({i, j});
    }
    page.label_ = "shifted:" + join(strict.parts());
    page.finalize();
    return page;
}

PageShape make_nrs_staircase(int n, int r, int s, bool minus)
{
    if (n < 1) {
        throw ShapeError("(n,r,s)-staircase needs n >= 1 (empty shape)");
    }
    if (r < 0 || s < 0) {
        throw ShapeError("(n,r,s)-staircase needs r, s >= 0");
    }
    PageShape page;
    page.kind_ = minus ? PageKind::NrsMinus : PageKind::Nrs;
    page.r_ = r;
    page.s_ = s;
    page.has_corner_ = !minus && r > 0 && s > 0;
    for (int i = 1; i <= n; ++i) page.diagonals_.push_back({i, r + i, r + i, i, i});
    for (int row = 1; row <= r + n; ++row) {
        for (int col = 1; col <= n + s; ++col) {
            if (row > r + col) continue;  // below the diagonal
            if (row - r == col) continue;  // diagonal cell
            if (minus && row <= r && col > n) continue;
            page.cells_.push_back({row, col});
        }
    }
    page.label_ = "nrs:n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                  (minus ? ",minus" : "");
    page.finalize();
    return page;
}

PageShape make_ars_staircase(const Composition& a, int r, int s, bool minus)
{
    if (a.length() == 0) {
        throw ShapeError("(a,r,s)-staircase needs at least one diagonal (empty shape)");
    }
    for (int part : a.parts()) {
        if (part < 1) throw ShapeError("(a,r,s)-staircase needs positive parts in a: " + join(a.parts()));
    }
    if (r < 0 || s < 0) {
        throw ShapeError("(a,r,s)-staircase needs r, s >= 0");
    }
    const int total = a.total();
    const std::size_t n = a.length();
    std::vector<int> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + a[i];

    // Truncated shape ((a+s)^(r+a)) \ ((A_{n-1})^{a_n}, ..., (A_1)^{a_2}).
    std::vector<int> mu;
    for (std::size_t i = n; i >= 2; --i) {
        for (int t = 0; t < a[i - 1]; ++t) mu.push_back(prefix[i - 1]);
    }
    PageShape base = make_truncated(Partition::rectangle(total + s, r + total), Partition(mu));

    PageShape page;
    page.kind_ = minus ? PageKind::ArsMinus : PageKind::Ars;
    page.r_ = r;
    page.s_ = s;
    page.has_corner_ = !minus && r > 0 && s > 0;
    for (std::size_t i = 0; i < n; ++i) {
        page.diagonals_.push_back({static_cast<int>(i + 1), r + prefix[i] + 1, r + prefix[i + 1], prefix[i] + 1,
                                   prefix[i + 1]});
    }
    for (const Cell& c : base.cells()) {
        bool merged = std::any_of(page.diagonals_.begin(), page.diagonals_.end(), [&](const DiagonalCell& d) {
            return d.contains_row(c.row) && d.contains_col(c.col);
        });
        if (merged) continue;
        if (minus && c.row <= r && c.col > total) continue;
        page.cells_.push_back(c);
    }
    page.label_ = "ars:a=" + join(a.parts()) + ";r=" + std::to_string(r) + ";s=" + std::to_string(s) +
                  (minus ? ",minus" : "");
    page.finalize();
    return page;
}

PageShape make_truncated(const Partition& lambda, const Partition& mu)
{
    const std::size_t k = lambda.length();
    if (mu.length() > k) {
        throw ShapeError("truncation (" + join(mu.parts()) + ") has more rows than (" + join(lambda.parts()) + ")");
    }
    std::vector<int> removed(k, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) {
        std::size_t row = k - 1 - i;  // 0-based row k+1-i (1-based i)
        if (mu[i] > lambda[row]) {
            throw ShapeError("truncation (" + join(mu.parts()) + ") does not fit in (" + join(lambda.parts()) + ")");
        }
        removed[row] = mu[i];
    }
    PageShape page;
    page.kind_ = PageKind::Truncated;
    for (std::size_t row = 0; row < k; ++row) {
        for (int col = removed[row] + 1; col <= lambda[row]; ++col) {
            page.cells_.push_back({static_cast<int>(row + 1), col});
        }
    }
    page.label_ = "trunc:" + join(lambda.parts()) + "\\" + join(mu.parts());
    page.finalize();
    return page;
}

PageShape make_skew(const Partition& lambda, const Partition& mu)
{
    if (mu.length() > lambda.length()) {
        throw ShapeError("(" + join(mu.parts()) + ") is not contained in (" + join(lambda.parts()) + ")");
    }
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu[i] > lambda[i]) {
            throw ShapeError("(" + join(mu.parts()) + ") is not contained in (" + join(lambda.parts()) + ")");
        }
    }
    PageShape page;
    page.kind_ = PageKind::Skew;
    for (std::size_t row = 0; row < lambda.length(); ++row) {
        for (int col = mu[row] + 1; col <= lambda[row]; ++col) {
            page.cells_.push_back({static_cast<int>(row + 1), col});
        }
    }
    page.label_ = "skew:" + join(lambda.parts()) + "/" + join(mu.parts());
    page.finalize();
    return page;
}

BookShape::BookShape(std::vector<PageShape> pages) : pages_(std::move(pages))
{
    if (pages_.empty()) {
        throw ShapeError("a book needs at least one page");
    }
    n_ = pages_.front().diagonal_count();
    if (n_ == 0) {
        throw ShapeError("a book needs at least one diagonal cell");
    }
    const std::vector<int> sizes = pages_.front().diagonal_sizes();
    for (const PageShape& page : pages_) {
        if (page.diagonal_count() != n_) {
            throw ShapeError("pages have different numbers of diagonal cells");
        }
        if (page.diagonal_sizes() != sizes) {
            throw ShapeError("pages have different diagonal span vectors");
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        BookElement e;
        e.diagonal = true;
        e.diagonal_index = static_cast<int>(i + 1);
        elements_.push_back(e);
    }
    local_to_global_.resize(pages_.size());
    for (std::size_t p = 0; p < pages_.size(); ++p) {
        const PageShape& page = pages_[p];
        auto& map = local_to_global_[p];
        map.resize(page.element_count());
        for (std::size_t i = 0; i < n_; ++i) map[i] = static_cast<int>(i);
        for (std::size_t c = 0; c < page.cells().size(); ++c) {
            BookElement e;
            e.page = static_cast<int>(p);
            e.cell = page.cells()[c];
            e.corner = page.is_corner(e.cell);
            if (e.corner) ++corner_cells_;
            map[static_cast<std::size_t>(page.element_of_cell(c))] = static_cast<int>(elements_.size());
            elements_.push_back(e);
        }
    }
}

int BookShape::global_id(std::size_t page, int local) const
{
    if (local < 0) return -1;
    return local_to_global_.at(page).at(static_cast<std::size_t>(local));
}

int BookShape::global_id_at(std::size_t page, Cell c) const
{
    return global_id(page, pages_.at(page).element_at(c));
}

bool BookShape::supports_selberg() const
{
    return std::all_of(pages_.begin(), pages_.end(), [](const PageShape& p) { return p.supports_selberg(); });
}

std::vector<int> BookShape::rows_above() const
{
    std::vector<int> out;
    for (const PageShape& p : pages_) out.push_back(p.rows_above());
    return out;
}

std::vector<int> BookShape::cols_right() const
{
    std::vector<int> out;
    for (const PageShape& p : pages_) out.push_back(p.cols_right());
    return out;
}

std::string BookShape::describe() const
{
    std::string out = "book:[";
    for (std::size_t p = 0; p < pages_.size(); ++p) {
        if (p) out += ";";
        out += pages_[p].describe();
    }
    return out + "]";
}

BookShape assemble_book(std::vector<PageShape> pages)
{
    return BookShape(std::move(pages));
}

BookShape make_staircase_book(int n, int m)
{
    if (m < 1) throw ArgumentError("a book needs m >= 1 pages");
    std::vector<PageShape> pages(static_cast<std::size_t>(m), make_shifted_staircase(n));
    return BookShape(std::move(pages));
}

BookShape make_nrs_book(int n, const Composition& rvec, const Composition& svec, bool minus)
{
    if (rvec.length() != svec.length()) {
        throw ArgumentError("r and s compositions must have the same length");
    }
    if (rvec.length() == 0) throw ArgumentError("a book needs m >= 1 pages");
    std::vector<PageShape> pages;
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        pages.push_back(make_nrs_staircase(n, rvec[i], svec[i], minus));
    }
    return BookShape(std::move(pages));
}

BookShape make_ars_book(const Composition& a, const Composition& rvec, const Composition& svec, bool minus)
{
    if (rvec.length() != svec.length()) {
        throw ArgumentError("r and s compositions must have the same length");
    }
    if (rvec.length() == 0) throw ArgumentError("a book needs m >= 1 pages");
    std::vector<PageShape> pages;
    for (std::size_t i = 0; i < rvec.length(); ++i) {
        pages.push_back(make_ars_staircase(a, rvec[i], svec[i], minus));
    }
    return BookShape(std::move(pages));
}

OrderConstraints::OrderConstraints(std::size_t size, std::vector<std::pair<int, int>> covers, OrderKind kind)
    : size_(size), covers_(std::move(covers)), kind_(kind)
{
    for (const auto& [u, v] : covers_) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size_ || static_cast<std::size_t>(v) >= size_) {
            throw ConstraintError("constraint refers to a missing element");
        }
    }
}

std::vector<std::vector<int>> OrderConstraints::predecessors() const
{
    std::vector<std::vector<int>> pred(size_);
    for (const auto& [u, v] : covers_) pred[static_cast<std::size_t>(v)].push_back(u);
    return pred;
}

namespace {

std::vector<int> topological_order(std::size_t size, const std::vector<std::pair<int, int>>& covers)
{
    std::vector<std::vector<int>> succ(size);
    std::vector<int> indegree(size, 0);
    for (const auto& [u, v] : covers) {
        succ[static_cast<std::size_t>(u)].push_back(v);
        ++indegree[static_cast<std::size_t>(v)];
    }
    std::queue<int> ready;
    for (std::size_t i = 0; i < size; ++i) {
        if (indegree[i] == 0) ready.push(static_cast<int>(i));
    }
    std::vector<int> order;
    while (!ready.empty()) {
        int u = ready.front();
        ready.pop();
        order.push_back(u);
        for (int v : succ[static_cast<std::size_t>(u)]) {
            if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
        }
    }
    return order;
}

}  // namespace

bool OrderConstraints::is_acyclic() const
{
    return topological_order(size_, covers_).size() == size_;
}

std::vector<std::vector<bool>> OrderConstraints::closure() const
{
    std::vector<int> order = topological_order(size_, covers_);
    if (order.size() != size_) {
        throw ConstraintError("order constraints contain a cycle");
    }
    auto pred = predecessors();
    std::vector<std::vector<bool>> less(size_, std::vector<bool>(size_, false));
    for (int v : order) {
        for (int u : pred[static_cast<std::size_t>(v)]) {
            less[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            for (std::size_t w = 0; w < size_; ++w) {
                if (less[w][static_cast<std::size_t>(u)]) less[w][static_cast<std::size_t>(v)] = true;
            }
        }
    }
    return less;
}

std::size_t OrderConstraints::comparable_pair_count() const
{
    auto less = closure();
    std::size_t count = 0;
    for (const auto& row : less) count += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    return count;
}

bool OrderConstraints::is_chain() const
{
    return comparable_pair_count() == size_ * (size_ - 1) / 2 || size_ <= 1;
}

namespace {

void add_grid_covers(const PageShape& page, const std::function<int(int)>& to_id, std::set<std::pair<int, int>>& out)
{
    for (int row = 1; row <= page.row_count(); ++row) {
        for (int col = 1; col <= page.col_count(); ++col) {
            int here = page.element_at(row, col);
            if (here < 0) continue;
            int right = page.element_at(row, col + 1);
            if (right >= 0 && right != here) out.emplace(to_id(here), to_id(right));
            int below = page.element_at(row + 1, col);
            if (below >= 0 && below != here) out.emplace(to_id(here), to_id(below));
        }
    }
}

}  // namespace

OrderConstraints order_constraints(const BookShape& book, OrderKind kind)
{
    std::set<std::pair<int, int>> covers;
    if (kind == OrderKind::Young) {
        for (std::size_t p = 0; p < book.page_count(); ++p) {
            add_grid_covers(book.pages()[p], [&](int local) { return book.global_id(p, local); }, covers);
        }
    } else {
        if (!book.supports_selberg()) {
            throw ArgumentError("Selberg constraints are not defined for " + book.describe());
        }
        for (std::size_t p = 0; p < book.page_count(); ++p) {
            const PageShape& page = book.pages()[p];
            for (std::size_t c = 0; c < page.cells().size(); ++c) {
                const Cell& cell = page.cells()[c];
                if (page.is_corner(cell)) continue;
                int id = book.global_id(p, page.element_of_cell(c));
                for (std::size_t d = 0; d < page.diagonal_count(); ++d) {
                    const DiagonalCell& diag = page.diagonals()[d];
                    if (diag.contains_row(cell.row)) covers.emplace(static_cast<int>(d), id);
                    if (diag.contains_col(cell.col)) covers.emplace(id, static_cast<int>(d));
                }
            }
        }
        for (std::size_t d = 0; d + 1 < book.diagonal_count(); ++d) {
            covers.emplace(static_cast<int>(d), static_cast<int>(d + 1));
        }
    }
    return OrderConstraints(book.total_cells(), {covers.begin(), covers.end()}, kind);
}

OrderConstraints young_order(const PageShape& page)
{
    std::set<std::pair<int, int>> covers;
    add_grid_covers(page, [](int local) { return local; }, covers);
    return OrderConstraints(page.element_count(), {covers.begin(), covers.end()}, OrderKind::Young);
}

PageShape make_double_staircase_skew(int n, int r1, int r2, int s1, int s2)
{
    std::vector<int> lambda(static_cast<std::size_t>(r1 + n), r2 + n + s1);
    for (int i = 0; i < s2; ++i) lambda.push_back(r2 + n);
    std::vector<int> mu(static_cast<std::size_t>(r1), r2);
    return make_skew(Partition(lambda), Partition(mu));
}

PageShape make_block_truncated(int k, int n, int r, int s)
{
    if (k < 1 || n < 1 || r < 0 || s < 0) {
        throw ShapeError("truncated target needs k, n >= 1 and r, s >= 0");
    }
    std::vector<int> mu;
    for (int block = n; block >= 1; --block) {
        for (int t = 0; t < k - 1; ++t) mu.push_back(k * block);
        mu.push_back(k * block - 1);
    }
    return make_truncated(Partition::rectangle(k * n + s, r + k * n), Partition(mu));
}

namespace {

void check_image(const Correspondence& corr)
{
    std::vector<Cell> image = corr.placement;
    std::sort(image.begin(), image.end());
    std::vector<Cell> target = corr.target.cells();
    if (image != target) {
        throw Error("correspondence image does not match " + corr.target.describe());
    }
}

bool is_plain_staircase_page(const PageShape& page)
{
    return page.kind() == PageKind::ShiftedStaircase ||
           ((page.kind() == PageKind::Nrs || page.kind() == PageKind::NrsMinus) && page.rows_above() == 0 &&
            page.cols_right() == 0);
}

}  // namespace

Correspondence skew_correspondence(const BookShape& book)
{
    if (book.page_count() != 2) {
        throw ArgumentError("skew correspondence needs a 2-page book");
    }
    for (const PageShape& page : book.pages()) {
        bool ok = page.kind() == PageKind::ShiftedStaircase || page.kind() == PageKind::Nrs ||
                  (page.kind() == PageKind::NrsMinus && page.rows_above() * page.cols_right() == 0);
        if (!ok) throw ArgumentError("skew correspondence needs (n,r,s)-staircase pages");
    }
    const int n = static_cast<int>(book.diagonal_count());
    const int r1 = book.pages()[0].rows_above();
    const int s1 = book.pages()[0].cols_right();
    const int r2 = book.pages()[1].rows_above();
    const int s2 = book.pages()[1].cols_right();
    Correspondence corr{make_double_staircase_skew(n, r1, r2, s1, s2), {}};
    corr.placement.resize(book.total_cells());
    for (std::size_t id = 0; id < book.total_cells(); ++id) {
        const BookElement& e = book.element(id);
        if (e.diagonal) {
            corr.placement[id] = {r1 + e.diagonal_index, r2 + e.diagonal_index};
        } else if (e.page == 0) {
            corr.placement[id] = {e.cell.row, e.cell.col + r2};
        } else {
            corr.placement[id] = {e.cell.col + r1, e.cell.row};
        }
    }
    check_image(corr);
    return corr;
}

Correspondence square_correspondence(const BookShape& book)
{
    if (book.page_count() != 2 || !is_plain_staircase_page(book.pages()[0]) ||
        !is_plain_staircase_page(book.pages()[1])) {
        throw ArgumentError("square correspondence needs two shifted staircases");
    }
    return skew_correspondence(book);
}

Correspondence truncated_correspondence(const BookShape& book)
{
    if (book.page_count() != 1) {
        throw ArgumentError("truncated correspondence needs a 1-page book");
    }
    const PageShape& page = book.pages()[0];
    if (page.kind() == PageKind::ArsMinus || page.kind() == PageKind::NrsMinus || !page.supports_selberg()) {
        throw ArgumentError("truncated correspondence needs a full ((k^n),r,s)-staircase page");
    }
    std::vector<int> sizes = page.diagonal_sizes();
    const int k = sizes.front();
    if (std::any_of(sizes.begin(), sizes.end(), [k](int a) { return a != k; })) {
        throw ArgumentError("truncated correspondence needs constant diagonal sizes a = (k^n)");
    }
    const int n = static_cast<int>(book.diagonal_count());
    Correspondence corr{make_block_truncated(k, n, page.rows_above(), page.cols_right()), {}};
    corr.placement.resize(book.total_cells());
    for (std::size_t id = 0; id < book.total_cells(); ++id) {
        const BookElement& e = book.element(id);
        if (e.diagonal) {
            const DiagonalCell& d = page.diagonals()[static_cast<std::size_t>(e.diagonal_index - 1)];
            corr.placement[id] = {d.first_row, d.last_col};
        } else {
            corr.placement[id] = e.cell;
        }
    }
    check_image(corr);
    return corr;
}

}  // namespace youngbook
