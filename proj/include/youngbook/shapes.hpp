#pragma once

// Diagrams used by Selberg and Young books: shifted staircases, (n,r,s)- and
// (a,r,s)-staircases (optionally with the northeast r x s corner removed),
// skew and truncated shapes, and books built by gluing pages along their
// diagonal cells.
//
// Coordinates are 1-based (row, column) in English convention.

#include "youngbook/exact.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace youngbook {

struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Weakly decreasing list of positive integers. Zero parts are dropped on
/// construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool is_strict() const;

    /// (value^count) repeated parts, e.g. rectangle(3, 2) == (3,3).
    static Partition rectangle(int value, int count);

private:
    std::vector<int> parts_;
};

/// Sequence of nonnegative integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int total() const { return total_; }
    int operator[](std::size_t i) const { return parts_.at(i); }

    /// All compositions of `total` with exactly `length` parts, in
    /// lexicographic order.
    static std::vector<Composition> all(int total, std::size_t length);

private:
    std::vector<int> parts_;
    int total_ = 0;
};

enum class PageKind {
    ShiftedStaircase,
    Shifted,
    Nrs,
    NrsMinus,
    Ars,
    ArsMinus,
    Skew,
    Truncated,
};

std::string to_string(PageKind kind);

/// A diagonal cell; merged diagonals of (a,r,s)-staircases span several rows
/// and columns and are contained in each of them.
struct DiagonalCell {
    int index = 0;  // 1-based
    int first_row = 0;
    int last_row = 0;
    int first_col = 0;
    int last_col = 0;

    int row_span() const { return last_row - first_row + 1; }
    int col_span() const { return last_col - first_col + 1; }
    bool contains_row(int row) const { return first_row <= row && row <= last_row; }
    bool contains_col(int col) const { return first_col <= col && col <= last_col; }
};

/// One page. Elements are numbered locally: diagonals 0..n-1, then the
/// off-diagonal cells in (row, column) order.
class PageShape {
public:
    PageKind kind() const { return kind_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<DiagonalCell>& diagonals() const { return diagonals_; }
    std::size_t diagonal_count() const { return diagonals_.size(); }
    std::size_t element_count() const { return diagonals_.size() + cells_.size(); }

    /// Number of grid cells, counting each merged diagonal once.
    std::size_t cell_count() const { return element_count(); }

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }

    /// Local element occupying the grid position, or -1.
    int element_at(int row, int col) const;
    int element_at(Cell c) const { return element_at(c.row, c.col); }

    /// Local id of an off-diagonal cell.
    int element_of_cell(std::size_t cell_index) const { return static_cast<int>(diagonals_.size() + cell_index); }

    /// Rows above the diagonal band (r) and columns right of it (s); zero for
    /// kinds without that structure.
    int rows_above() const { return r_; }
    int cols_right() const { return s_; }
    std::vector<int> diagonal_sizes() const;

    /// Off-diagonal cells of the northeast r x s rectangle still present.
    bool is_corner(Cell c) const;
    std::size_t corner_cell_count() const;

    /// True when Selberg betweenness is defined for the page (every
    /// off-diagonal cell outside the corner sees a diagonal in its row or
    /// column).
    bool supports_selberg() const;

    std::string describe() const;

    friend PageShape make_shifted_staircase(int n);
    friend PageShape make_shifted(const Partition& strict);
    friend PageShape make_nrs_staircase(int n, int r, int s, bool minus);
    friend PageShape make_ars_staircase(const Composition& a, int r, int s, bool minus);
    friend PageShape make_truncated(const Partition& lambda, const Partition& mu);
    friend PageShape make_skew(const Partition& lambda, const Partition& mu);

private:
    PageShape() = default;
    void finalize();

    PageKind kind_ = PageKind::Skew;
    std::vector<Cell> cells_;
    std::vector<DiagonalCell> diagonals_;
    std::vector<int> grid_;
    int rows_ = 0;
    int cols_ = 0;
    int r_ = 0;
    int s_ = 0;
    bool has_corner_ = false;
    std::string label_;
};

PageShape make_shifted_staircase(int n);
/// General shifted diagram of a strict partition; row i starts at column i and
/// (i,i) is its diagonal cell.
PageShape make_shifted(const Partition& strict);
PageShape make_nrs_staircase(int n, int r, int s, bool minus = false);
PageShape make_ars_staircase(const Composition& a, int r, int s, bool minus = false);
/// Diagram of lambda with mu_i cells removed from the left of row k+1-i.
PageShape make_truncated(const Partition& lambda, const Partition& mu);
PageShape make_skew(const Partition& lambda, const Partition& mu);

/// Element of a book: a shared diagonal, or an off-diagonal cell of a page.
struct BookElement {
    bool diagonal = false;
    int diagonal_index = 0;  // 1-based, diagonals only
    int page = 0;            // 0-based, off-diagonal cells only
    Cell cell;               // off-diagonal cells only
    bool corner = false;
};

/// Pages glued along their diagonal cells. Global ids: diagonals 0..n-1, then
/// off-diagonal cells by (page, row, column).
class BookShape {
public:
    explicit BookShape(std::vector<PageShape> pages);

    const std::vector<PageShape>& pages() const { return pages_; }
    std::size_t page_count() const { return pages_.size(); }
    std::size_t diagonal_count() const { return n_; }
    std::size_t total_cells() const { return elements_.size(); }
    std::size_t minus_cells() const { return elements_.size() - corner_cells_; }

    const std::vector<BookElement>& elements() const { return elements_; }
    const BookElement& element(std::size_t id) const { return elements_.at(id); }

    /// Global id of a page-local element.
    int global_id(std::size_t page, int local) const;
    /// Global id of the element at a grid position of a page, or -1.
    int global_id_at(std::size_t page, Cell c) const;

    bool has_corner_cells() const { return corner_cells_ > 0; }
    bool supports_selberg() const;

    /// Row-above and column-right counts per page.
    std::vector<int> rows_above() const;
    std::vector<int> cols_right() const;

    std::string describe() const;

private:
    std::vector<PageShape> pages_;
    std::size_t n_ = 0;
    std::size_t corner_cells_ = 0;
    std::vector<BookElement> elements_;
    std::vector<std::vector<int>> local_to_global_;
};

using BookPtr = std::shared_ptr<const BookShape>;

BookShape assemble_book(std::vector<PageShape> pages);

/// (n,m) book of m shifted staircases of size n.
BookShape make_staircase_book(int n, int m);
/// (n, rvec, svec) book; rvec and svec must have equal length.
BookShape make_nrs_book(int n, const Composition& rvec, const Composition& svec, bool minus = false);
BookShape make_ars_book(const Composition& a, const Composition& rvec, const Composition& svec, bool minus = false);

enum class OrderKind { Young, Selberg };

std::string to_string(OrderKind kind);

/// Cover-style constraints u < v on elements 0..size-1.
class OrderConstraints {
public:
    OrderConstraints(std::size_t size, std::vector<std::pair<int, int>> covers, OrderKind kind);

    std::size_t size() const { return size_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    OrderKind kind() const { return kind_; }

    bool is_acyclic() const;
    /// less[u][v] is true iff u < v in the transitive closure. Throws
    /// ConstraintError on a cycle.
    std::vector<std::vector<bool>> closure() const;
    std::size_t comparable_pair_count() const;
    bool is_chain() const;

    /// Direct predecessors of each element.
    std::vector<std::vector<int>> predecessors() const;

private:
    std::size_t size_;
    std::vector<std::pair<int, int>> covers_;
    OrderKind kind_;
};

OrderConstraints order_constraints(const BookShape& book, OrderKind kind);
/// Row/column order of a single page (the standard tableau order).
OrderConstraints young_order(const PageShape& page);

/// Target shape of a book-to-tableau correspondence together with the grid
/// position assigned to each global element of the book.
struct Correspondence {
    PageShape target;
    std::vector<Cell> placement;
};

/// Two shifted staircases of size n, the second flipped: square (n^n).
Correspondence square_correspondence(const BookShape& book);
/// Two (n, r_i, s_i)-staircases, the second flipped: skew shape
/// ((r2+n+s1)^(r1+n), (r2+n)^s2) / (r2^r1).
Correspondence skew_correspondence(const BookShape& book);
/// One ((k^n), r, s)-staircase, each merged diagonal replaced by its
/// northeast grid cell.
Correspondence truncated_correspondence(const BookShape& book);

/// Truncated target shape for ((k^n), r, s).
PageShape make_block_truncated(int k, int n, int r, int s);
/// Skew target shape for (n, (r1,r2), (s1,s2)).
PageShape make_double_staircase_skew(int n, int r1, int r2, int s1, int s2);

}  // namespace youngbook
