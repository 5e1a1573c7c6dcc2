#pragma once

// Enumeration and counting of Selberg books, Young books and Selberg
// permutations.

#include "youngbook/exact.hpp"
#include "youngbook/multipoly.hpp"
#include "youngbook/shapes.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace youngbook {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;
inline constexpr std::size_t kDefaultCellBudget = 14;

/// Number of linear extensions via dynamic programming over down-sets.
/// Throws ConstraintError on a cycle, BudgetError when more than
/// `state_budget` down-sets are visited or the poset has more than 64
/// elements.
ExactInt count_linear_extensions(const OrderConstraints& constraints,
                                 std::uint64_t state_budget = kDefaultStateBudget);

/// Gap-refined counts of the valid fillings of a book. The coefficient of
/// t_0^d_0 ... t_n^d_n is the number of fillings whose gap vector is d
/// (ordinary coefficients, not exponential ones). Same budgets as
/// count_linear_extensions, with every (down-set, gap prefix) pair counted as
/// a state.
MultiPoly gap_polynomial(const BookShape& book, OrderKind kind, std::uint64_t state_budget = kDefaultStateBudget);

/// Streams the linear extensions of a poset as words (element placed at
/// label 1, 2, ...), in lexicographic order of the words.
class LinearExtensionStream {
public:
    explicit LinearExtensionStream(const OrderConstraints& constraints);

    /// Next word, or nullopt once exhausted.
    std::optional<std::vector<int>> next();

private:
    bool place_smallest_from(std::size_t depth, int after);
    void unplace(int element);

    std::size_t size_;
    std::vector<std::vector<int>> succ_;
    std::vector<int> pending_;  // unplaced predecessor count
    std::vector<bool> placed_;
    std::vector<int> word_;
    bool started_ = false;
    bool done_ = false;
};

/// Labelled book: labels[id] in 1..total_cells for each global element id.
class Filling {
public:
    Filling(BookPtr book, std::vector<int> labels);

    const BookShape& book() const { return *book_; }
    const BookPtr& book_ptr() const { return book_; }
    const std::vector<int>& labels() const { return labels_; }
    int label(std::size_t element) const { return labels_.at(element); }

    /// Element holding label 1, 2, ...
    std::vector<int> word() const;
    /// Labels of the diagonal cells, in diagonal order.
    std::vector<int> diagonal_labels() const;
    /// Label at a grid position of a page.
    int label_at(std::size_t page, Cell c) const;

    static Filling from_word(BookPtr book, const std::vector<int>& word);

    friend bool operator==(const Filling& a, const Filling& b) { return a.labels_ == b.labels_; }

private:
    BookPtr book_;
    std::vector<int> labels_;
};

bool is_valid_filling(const Filling& filling, OrderKind kind);

struct EnumerationOptions {
    std::size_t cell_budget = kDefaultCellBudget;
    /// When set, the stream stops after this many fillings and the cell
    /// budget is not enforced.
    std::optional<std::uint64_t> limit;
};

/// Single-consumer stream of every valid filling of a book.
class FillingStream {
public:
    FillingStream(BookPtr book, OrderKind kind, EnumerationOptions options = {});

    std::optional<Filling> next();

private:
    BookPtr book_;
    LinearExtensionStream words_;
    std::optional<std::uint64_t> limit_;
    std::uint64_t emitted_ = 0;
};

std::vector<Filling> enumerate_fillings(BookPtr book, OrderKind kind, EnumerationOptions options = {});

/// Gaps d_0..d_n between consecutive diagonal labels, with the sentinels
/// a_0 = 0 and a_{n+1} = total labels + 1.
struct GapVector {
    std::vector<long> gaps;

    /// d_1..d_{n-1}.
    std::vector<long> interior() const;
    friend auto operator<=>(const GapVector&, const GapVector&) = default;
};

GapVector classify_by_gaps(const Filling& filling);

enum class LetterKind { X, A, B, C };

/// x_i, a_ij^(k), b_i^(k) or c_i^(k). Unused indices are zero.
struct SelbergLetter {
    LetterKind kind = LetterKind::X;
    int i = 0;
    int j = 0;
    int k = 0;

    std::string to_string() const;
    auto operator<=>(const SelbergLetter&) const = default;
};

struct SelbergPermutation {
    std::vector<SelbergLetter> letters;

    std::string to_string() const;
    friend bool operator==(const SelbergPermutation&, const SelbergPermutation&) = default;
};

/// The alphabet A(n,r,s,m) in canonical order (x's, a's, b's, c's).
std::vector<SelbergLetter> selberg_alphabet(int n, int r, int s, int m);

/// Checks that the word uses each letter of A(n,r,s,m) exactly once and that
/// the x's are ordered, a_ij lies between x_i and x_j, b_i precedes x_i and
/// c_i follows x_i.
bool is_selberg_permutation(const SelbergPermutation& perm, int n, int r, int s, int m);

/// Streams SP(n,r,s,m) in lexicographic order of alphabet positions.
class SelbergPermutationStream {
public:
    SelbergPermutationStream(int n, int r, int s, int m, EnumerationOptions options = {});

    std::optional<SelbergPermutation> next();

private:
    bool placeable(std::size_t letter) const;

    std::vector<SelbergLetter> alphabet_;
    std::vector<bool> used_;
    std::vector<std::size_t> stack_;
    std::vector<int> x_placed_;  // count of x_i placed, indexed by i
    std::vector<int> b_left_;    // unplaced b_i letters
    std::vector<int> a_left_;    // unplaced a_hi letters (h < i)
    std::optional<std::uint64_t> limit_;
    std::uint64_t emitted_ = 0;
    bool started_ = false;
    bool done_ = false;
};

std::vector<SelbergPermutation> enumerate_selberg_permutations(int n, int r, int s, int m,
                                                               EnumerationOptions options = {});

/// Letter for an element of a minus book (no corner cells).
SelbergLetter letter_of_element(const BookShape& book, std::size_t element);

SelbergPermutation book_to_permutation(const Filling& filling);
Filling permutation_to_book(BookPtr book, const SelbergPermutation& perm);

/// The letters of a minus book computed once, for converting many fillings.
class LetterMap {
public:
    explicit LetterMap(BookPtr book);

    const BookPtr& book() const { return book_; }
    const SelbergLetter& letter(std::size_t element) const { return letters_.at(element); }

    SelbergPermutation to_permutation(const Filling& filling) const;
    /// Throws ArgumentError unless `perm` is a Selberg permutation of the
    /// book's alphabet.
    Filling to_filling(const SelbergPermutation& perm) const;

private:
    BookPtr book_;
    std::vector<SelbergLetter> letters_;
    std::map<SelbergLetter, int> element_of_;
    int n_ = 0;
    int r_ = 0;
    int s_ = 0;
    int m_ = 0;
};

/// Checks the frozen block of rows and columns k+1..k+l of a filling of a
/// single shifted staircase. Requires d_{k+1}=1, ..., d_{k+l-1}=l-1 (throws
/// ArgumentError otherwise). Young kind: the entry in row k+i, column k+j is
/// exactly x + C(j,2) + i - 1 with x the (k+1)st diagonal entry. Selberg
/// kind: the off-diagonal entries of column k+j in rows k+1..k+j-1 are a
/// permutation of x + C(j,2), ..., x + C(j,2) + j - 2.
bool check_freeze(const Filling& filling, int k, int l, OrderKind kind);

/// Whether the gap vector of the filling satisfies the freeze precondition.
bool freeze_applies(const GapVector& gaps, int k, int l);

/// A tableau on a single page: labels indexed by local element id.
struct Tableau {
    PageShape shape;
    std::vector<int> labels;

    int label_at(Cell c) const;
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.labels == b.labels; }
};

bool is_standard_tableau(const Tableau& t);

Tableau to_square_tableau(const Filling& filling);
Tableau to_skew_tableau(const Filling& filling);
Tableau to_truncated_tableau(const Filling& filling);
/// Inverse of the three maps above: reads the book labels back off the
/// tableau through the book's correspondence.
Filling from_tableau(BookPtr book, const Correspondence& corr, const Tableau& tableau);

}  // namespace youngbook
