#include "youngbook/combinat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace youngbook {

ExactInt count_linear_extensions(const OrderConstraints& constraints, std::uint64_t state_budget)
{
    const std::size_t size = constraints.size();
    if (!constraints.is_acyclic()) {
        throw ConstraintError("order constraints contain a cycle");
    }
    if (size == 0) return 1;
    if (size > 64) {
        throw BudgetError("down-set DP supports at most 64 elements, got " + std::to_string(size));
    }
    std::vector<std::uint64_t> below(size, 0);
    for (const auto& [u, v] : constraints.covers()) {
        below[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    // Layer t holds the down-sets of size t with the number of ways to reach
    // them from the empty set.
    std::unordered_map<std::uint64_t, ExactInt> layer{{0, ExactInt(1)}};
    std::uint64_t states = 1;
    for (std::size_t t = 0; t < size; ++t) {
        std::unordered_map<std::uint64_t, ExactInt> next;
        next.reserve(layer.size() * 2);
        for (const auto& [mask, ways] : layer) {
            for (std::size_t v = 0; v < size; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if ((mask & bit) || (below[v] & ~mask)) continue;
                next[mask | bit] += ways;
            }
        }
        states += next.size();
        if (states > state_budget) {
            throw BudgetError("down-set DP exceeded the budget of " + std::to_string(state_budget) + " states");
        }
        layer = std::move(next);
    }
    return layer.begin()->second;
}

MultiPoly gap_polynomial(const BookShape& book, OrderKind kind, std::uint64_t state_budget)
{
    OrderConstraints constraints = order_constraints(book, kind);
    const std::size_t size = constraints.size();
    const std::size_t n = book.diagonal_count();
    if (size > 64) {
        throw BudgetError("down-set DP supports at most 64 elements, got " + std::to_string(size));
    }
    std::vector<std::uint64_t> below(size, 0);
    for (const auto& [u, v] : constraints.covers()) {
        below[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    std::uint64_t diagonal_mask = 0;
    for (std::size_t i = 0; i < n; ++i) diagonal_mask |= std::uint64_t{1} << i;

    using Refined = std::map<std::vector<int>, ExactInt>;
    std::unordered_map<std::uint64_t, Refined> layer;
    layer[0][std::vector<int>(n + 1, 0)] = 1;
    std::uint64_t states = 1;
    for (std::size_t t = 0; t < size; ++t) {
        std::unordered_map<std::uint64_t, Refined> next;
        for (const auto& [mask, refined] : layer) {
            auto placed_diagonals = static_cast<std::size_t>(std::popcount(mask & diagonal_mask));
            for (std::size_t v = 0; v < size; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if ((mask & bit) || (below[v] & ~mask)) continue;
                Refined& target = next[mask | bit];
                for (const auto& [gaps, ways] : refined) {
                    if (bit & diagonal_mask) {
                        target[gaps] += ways;
                    } else {
                        std::vector<int> grown = gaps;
                        ++grown[placed_diagonals];
                        target[grown] += ways;
                    }
                }
            }
        }
        for (const auto& [mask, refined] : next) states += refined.size();
        if (states > state_budget) {
            throw BudgetError("down-set DP exceeded the budget of " + std::to_string(state_budget) + " states");
        }
        layer = std::move(next);
    }
    MultiPoly out(n + 1, 0);
    for (const auto& [mask, refined] : layer) {
        for (const auto& [gaps, ways] : refined) out += MultiPoly::monomial(0, gaps, ExactRational(ways));
    }
    return out;
}

LinearExtensionStream::LinearExtensionStream(const OrderConstraints& constraints)
    : size_(constraints.size()), succ_(size_), pending_(size_, 0), placed_(size_, false)
{
    if (!constraints.is_acyclic()) {
        throw ConstraintError("order constraints contain a cycle");
    }
    for (const auto& [u, v] : constraints.covers()) {
        succ_[static_cast<std::size_t>(u)].push_back(v);
        ++pending_[static_cast<std::size_t>(v)];
    }
}

bool LinearExtensionStream::place_smallest_from(std::size_t depth, int after)
{
    while (word_.size() > depth) {
        unplace(word_.back());
    }
    for (std::size_t v = static_cast<std::size_t>(after + 1); v < size_; ++v) {
        if (!placed_[v] && pending_[v] == 0) {
            placed_[v] = true;
            word_.push_back(static_cast<int>(v));
            for (int w : succ_[v]) --pending_[static_cast<std::size_t>(w)];
            return true;
        }
    }
    return false;
}

void LinearExtensionStream::unplace(int element)
{
    word_.pop_back();
    placed_[static_cast<std::size_t>(element)] = false;
    for (int w : succ_[static_cast<std::size_t>(element)]) ++pending_[static_cast<std::size_t>(w)];
}

std::optional<std::vector<int>> LinearExtensionStream::next()
{
    if (done_) return std::nullopt;
    if (started_) {
        // Advance the deepest position that still has an untried candidate.
        bool advanced = false;
        while (!word_.empty()) {
            std::size_t depth = word_.size() - 1;
            int last = word_.back();
            if (place_smallest_from(depth, last)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    while (word_.size() < size_) {
        place_smallest_from(word_.size(), -1);
    }
    return word_;
}

Filling::Filling(BookPtr book, std::vector<int> labels) : book_(std::move(book)), labels_(std::move(labels))
{
    const std::size_t n = book_->total_cells();
    if (labels_.size() != n) {
        throw ArgumentError("filling has " + std::to_string(labels_.size()) + " labels for " + std::to_string(n) +
                            " cells");
    }
    std::vector<bool> seen(n + 1, false);
    for (int label : labels_) {
        if (label < 1 || static_cast<std::size_t>(label) > n || seen[static_cast<std::size_t>(label)]) {
            throw ArgumentError("filling labels are not a bijection onto 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(label)] = true;
    }
}

std::vector<int> Filling::word() const
{
    std::vector<int> word(labels_.size());
    for (std::size_t id = 0; id < labels_.size(); ++id) {
        word[static_cast<std::size_t>(labels_[id] - 1)] = static_cast<int>(id);
    }
    return word;
}

std::vector<int> Filling::diagonal_labels() const
{
    return {labels_.begin(), labels_.begin() + static_cast<long>(book_->diagonal_count())};
}

int Filling::label_at(std::size_t page, Cell c) const
{
    int id = book_->global_id_at(page, c);
    if (id < 0) {
        throw ArgumentError("no cell at (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    }
    return labels_[static_cast<std::size_t>(id)];
}

Filling Filling::from_word(BookPtr book, const std::vector<int>& word)
{
    std::vector<int> labels(word.size(), 0);
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        if (word[pos] < 0 || static_cast<std::size_t>(word[pos]) >= word.size()) {
            throw ArgumentError("word refers to a missing element");
        }
        labels[static_cast<std::size_t>(word[pos])] = static_cast<int>(pos + 1);
    }
    return Filling(std::move(book), std::move(labels));
}

bool is_valid_filling(const Filling& filling, OrderKind kind)
{
    OrderConstraints constraints = order_constraints(filling.book(), kind);
    return std::all_of(constraints.covers().begin(), constraints.covers().end(), [&](const auto& cover) {
        return filling.label(static_cast<std::size_t>(cover.first)) <
               filling.label(static_cast<std::size_t>(cover.second));
    });
}

FillingStream::FillingStream(BookPtr book, OrderKind kind, EnumerationOptions options)
    : book_(std::move(book)), words_(order_constraints(*book_, kind)), limit_(options.limit)
{
    if (!limit_ && book_->total_cells() > options.cell_budget) {
        throw BudgetError("book has " + std::to_string(book_->total_cells()) + " cells, over the enumeration budget of " +
                          std::to_string(options.cell_budget));
    }
}

std::optional<Filling> FillingStream::next()
{
    if (limit_ && emitted_ >= *limit_) return std::nullopt;
    auto word = words_.next();
    if (!word) return std::nullopt;
    ++emitted_;
    return Filling::from_word(book_, *word);
}

std::vector<Filling> enumerate_fillings(BookPtr book, OrderKind kind, EnumerationOptions options)
{
    FillingStream stream(std::move(book), kind, options);
    std::vector<Filling> out;
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

std::vector<long> GapVector::interior() const
{
    if (gaps.size() < 2) return {};
    return {gaps.begin() + 1, gaps.end() - 1};
}

GapVector classify_by_gaps(const Filling& filling)
{
    std::vector<int> diag = filling.diagonal_labels();
    GapVector out;
    long previous = 0;
    for (int a : diag) {
        out.gaps.push_back(a - previous - 1);
        previous = a;
    }
    out.gaps.push_back(static_cast<long>(filling.book().total_cells()) + 1 - previous - 1);
    return out;
}

std::string SelbergLetter::to_string() const
{
    auto idx = [](int v) { return std::to_string(v); };
    switch (kind) {
    case LetterKind::X: return "x" + idx(i);
    case LetterKind::A:
        if (i < 10 && j < 10) return "a" + idx(i) + idx(j) + "^" + idx(k);
        return "a{" + idx(i) + "," + idx(j) + "}^" + idx(k);
    case LetterKind::B: return "b" + idx(i) + "^" + idx(k);
    case LetterKind::C: return "c" + idx(i) + "^" + idx(k);
    }
    return "?";
}

std::string SelbergPermutation::to_string() const
{
    std::string out;
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (p) out += " ";
        out += letters[p].to_string();
    }
    return out;
}

std::vector<SelbergLetter> selberg_alphabet(int n, int r, int s, int m)
{
    if (n < 1 || r < 0 || s < 0 || m < 0) {
        throw ArgumentError("Selberg alphabet needs n >= 1 and r, s, m >= 0");
    }
    std::vector<SelbergLetter> out;
    for (int i = 1; i <= n; ++i) out.push_back({LetterKind::X, i, 0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= m; ++k) out.push_back({LetterKind::A, i, j, k});
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= r; ++k) out.push_back({LetterKind::B, i, 0, k});
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= s; ++k) out.push_back({LetterKind::C, i, 0, k});
    return out;
}

bool is_selberg_permutation(const SelbergPermutation& perm, int n, int r, int s, int m)
{
    std::vector<SelbergLetter> expected = selberg_alphabet(n, r, s, m);
    std::vector<SelbergLetter> got = perm.letters;
    std::sort(got.begin(), got.end());
    if (got != expected) return false;

    std::vector<std::size_t> x_pos(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t p = 0; p < perm.letters.size(); ++p) {
        if (perm.letters[p].kind == LetterKind::X) x_pos[static_cast<std::size_t>(perm.letters[p].i)] = p;
    }
    for (int i = 2; i <= n; ++i) {
        if (x_pos[static_cast<std::size_t>(i - 1)] > x_pos[static_cast<std::size_t>(i)]) return false;
    }
    for (std::size_t p = 0; p < perm.letters.size(); ++p) {
        const SelbergLetter& l = perm.letters[p];
        std::size_t xi = x_pos[static_cast<std::size_t>(l.i)];
        switch (l.kind) {
        case LetterKind::X: break;
        case LetterKind::A:
            if (!(xi < p && p < x_pos[static_cast<std::size_t>(l.j)])) return false;
            break;
        case LetterKind::B:
            if (!(p < xi)) return false;
            break;
        case LetterKind::C:
            if (!(xi < p)) return false;
            break;
        }
    }
    return true;
}

SelbergPermutationStream::SelbergPermutationStream(int n, int r, int s, int m, EnumerationOptions options)
    : alphabet_(selberg_alphabet(n, r, s, m)), used_(alphabet_.size(), false),
      x_placed_(static_cast<std::size_t>(n) + 1, 0), b_left_(static_cast<std::size_t>(n) + 1, r),
      a_left_(static_cast<std::size_t>(n) + 1, 0), limit_(options.limit)
{
    if (!limit_ && alphabet_.size() > options.cell_budget) {
        throw BudgetError("alphabet has " + std::to_string(alphabet_.size()) + " letters, over the budget of " +
                          std::to_string(options.cell_budget));
    }
    for (int j = 1; j <= n; ++j) a_left_[static_cast<std::size_t>(j)] = m * (j - 1);
}

bool SelbergPermutationStream::placeable(std::size_t letter) const
{
    if (used_[letter]) return false;
    const SelbergLetter& l = alphabet_[letter];
    auto i = static_cast<std::size_t>(l.i);
    switch (l.kind) {
    case LetterKind::X:
        return (l.i == 1 || x_placed_[i - 1]) && b_left_[i] == 0 && a_left_[i] == 0;
    case LetterKind::A:
        return x_placed_[i] && !x_placed_[static_cast<std::size_t>(l.j)];
    case LetterKind::B:
        return !x_placed_[i];
    case LetterKind::C:
        return x_placed_[i] != 0;
    }
    return false;
}

std::optional<SelbergPermutation> SelbergPermutationStream::next()
{
    if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;

    auto apply = [&](std::size_t letter, int delta) {
        const SelbergLetter& l = alphabet_[letter];
        auto i = static_cast<std::size_t>(l.i);
        used_[letter] = delta > 0;
        switch (l.kind) {
        case LetterKind::X: x_placed_[i] += delta; break;
        case LetterKind::A: a_left_[static_cast<std::size_t>(l.j)] -= delta; break;
        case LetterKind::B: b_left_[i] -= delta; break;
        case LetterKind::C: break;
        }
    };
    auto try_from = [&](std::size_t start) {
        for (std::size_t c = start; c < alphabet_.size(); ++c) {
            if (placeable(c)) {
                apply(c, +1);
                stack_.push_back(c);
                return true;
            }
        }
        return false;
    };

    if (started_) {
        bool advanced = false;
        while (!stack_.empty()) {
            std::size_t last = stack_.back();
            stack_.pop_back();
            apply(last, -1);
            if (try_from(last + 1)) {
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    while (stack_.size() < alphabet_.size()) {
        if (!try_from(0)) {
            throw Error("Selberg permutation prefix cannot be completed");
        }
    }
    SelbergPermutation perm;
    for (std::size_t c : stack_) perm.letters.push_back(alphabet_[c]);
    ++emitted_;
    return perm;
}

std::vector<SelbergPermutation> enumerate_selberg_permutations(int n, int r, int s, int m, EnumerationOptions options)
{
    SelbergPermutationStream stream(n, r, s, m, options);
    std::vector<SelbergPermutation> out;
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

void require_letter_book(const BookShape& book)
{
    for (const PageShape& page : book.pages()) {
        bool ok = page.kind() == PageKind::ShiftedStaircase || page.kind() == PageKind::NrsMinus ||
                  (page.kind() == PageKind::Nrs && page.rows_above() * page.cols_right() == 0);
        if (!ok) {
            throw ArgumentError("letters are defined only on (n,r,s)^- books, not on " + page.describe());
        }
    }
}

}  // namespace

SelbergLetter letter_of_element(const BookShape& book, std::size_t element)
{
    require_letter_book(book);
    const BookElement& e = book.element(element);
    if (e.diagonal) return {LetterKind::X, e.diagonal_index, 0, 0};
    if (e.corner) throw ArgumentError("corner cells have no letter");

    const int n = static_cast<int>(book.diagonal_count());
    const auto page_index = static_cast<std::size_t>(e.page);
    const PageShape& page = book.pages()[page_index];
    int rows_before = 0;
    int cols_before = 0;
    for (std::size_t p = 0; p < page_index; ++p) {
        rows_before += book.pages()[p].rows_above();
        cols_before += book.pages()[p].cols_right();
    }
    const int r = page.rows_above();
    if (e.cell.row <= r) {
        return {LetterKind::B, e.cell.col, 0, rows_before + e.cell.row};
    }
    const int i = e.cell.row - r;
    if (e.cell.col <= n) {
        return {LetterKind::A, i, e.cell.col, e.page + 1};
    }
    return {LetterKind::C, i, 0, cols_before + e.cell.col - n};
}

LetterMap::LetterMap(BookPtr book) : book_(std::move(book))
{
    if (book_->has_corner_cells()) {
        throw ArgumentError("letters need a minus book (corner cells have no letter)");
    }
    for (std::size_t id = 0; id < book_->total_cells(); ++id) {
        letters_.push_back(letter_of_element(*book_, id));
        element_of_[letters_.back()] = static_cast<int>(id);
    }
    auto rvec = book_->rows_above();
    auto svec = book_->cols_right();
    r_ = std::accumulate(rvec.begin(), rvec.end(), 0);
    s_ = std::accumulate(svec.begin(), svec.end(), 0);
    n_ = static_cast<int>(book_->diagonal_count());
    m_ = static_cast<int>(book_->page_count());
}

SelbergPermutation LetterMap::to_permutation(const Filling& filling) const
{
    if (filling.book_ptr() != book_ && filling.book().describe() != book_->describe()) {
        throw ArgumentError("filling belongs to a different book");
    }
    SelbergPermutation perm;
    perm.letters.reserve(letters_.size());
    for (int element : filling.word()) perm.letters.push_back(letters_[static_cast<std::size_t>(element)]);
    return perm;
}

Filling LetterMap::to_filling(const SelbergPermutation& perm) const
{
    if (!is_selberg_permutation(perm, n_, r_, s_, m_)) {
        throw ArgumentError("not a Selberg permutation of A(" + std::to_string(n_) + "," + std::to_string(r_) + "," +
                            std::to_string(s_) + "," + std::to_string(m_) + ")");
    }
    std::vector<int> word;
    word.reserve(perm.letters.size());
    for (const SelbergLetter& l : perm.letters) word.push_back(element_of_.at(l));
    return Filling::from_word(book_, word);
}

SelbergPermutation book_to_permutation(const Filling& filling)
{
    return LetterMap(filling.book_ptr()).to_permutation(filling);
}

Filling permutation_to_book(BookPtr book, const SelbergPermutation& perm)
{
    return LetterMap(std::move(book)).to_filling(perm);
}

bool freeze_applies(const GapVector& gaps, int k, int l)
{
    for (int t = 1; t <= l - 1; ++t) {
        auto idx = static_cast<std::size_t>(k + t);
        if (idx >= gaps.gaps.size() || gaps.gaps[idx] != t) return false;
    }
    return true;
}

bool check_freeze(const Filling& filling, int k, int l, OrderKind kind)
{
    const BookShape& book = filling.book();
    if (book.page_count() != 1 || book.pages()[0].rows_above() != 0 || book.pages()[0].cols_right() != 0 ||
        !book.supports_selberg() || book.pages()[0].diagonal_sizes() != std::vector<int>(book.diagonal_count(), 1)) {
        throw ArgumentError("check_freeze needs a filling of a single shifted staircase");
    }
    const int n = static_cast<int>(book.diagonal_count());
    if (k < 0 || l < 0 || k + l > n) {
        throw ArgumentError("freeze block rows " + std::to_string(k + 1) + ".." + std::to_string(k + l) +
                            " outside the staircase");
    }
    if (!freeze_applies(classify_by_gaps(filling), k, l)) {
        throw ArgumentError("gap vector does not satisfy d_{k+t} = t for t < l");
    }
    if (l <= 1) return true;
    const long x = filling.label_at(0, {k + 1, k + 1});
    auto c2 = [](long j) { return j * (j - 1) / 2; };
    if (kind == OrderKind::Young) {
        for (int j = 1; j <= l; ++j) {
            for (int i = 1; i <= j; ++i) {
                if (filling.label_at(0, {k + i, k + j}) != x + c2(j) + i - 1) return false;
            }
        }
        return true;
    }
    for (int j = 2; j <= l; ++j) {
        std::vector<long> column;
        for (int i = 1; i <= j - 1; ++i) column.push_back(filling.label_at(0, {k + i, k + j}));
        std::sort(column.begin(), column.end());
        for (int i = 1; i <= j - 1; ++i) {
            if (column[static_cast<std::size_t>(i - 1)] != x + c2(j) + i - 1) return false;
        }
    }
    return true;
}

int Tableau::label_at(Cell c) const
{
    int local = shape.element_at(c);
    if (local < 0) throw ArgumentError("tableau has no cell there");
    return labels.at(static_cast<std::size_t>(local));
}

bool is_standard_tableau(const Tableau& t)
{
    const std::size_t n = t.shape.element_count();
    if (t.labels.size() != n) return false;
    std::vector<int> sorted = t.labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != static_cast<int>(i + 1)) return false;
    }
    OrderConstraints order = young_order(t.shape);
    return std::all_of(order.covers().begin(), order.covers().end(), [&](const auto& c) {
        return t.labels[static_cast<std::size_t>(c.first)] < t.labels[static_cast<std::size_t>(c.second)];
    });
}

namespace {

Tableau apply_correspondence(const Filling& filling, const Correspondence& corr)
{
    if (!is_valid_filling(filling, OrderKind::Young)) {
        throw ArgumentError("tableau correspondences apply to Young books only");
    }
    Tableau t{corr.target, std::vector<int>(corr.target.element_count(), 0)};
    for (std::size_t id = 0; id < corr.placement.size(); ++id) {
        int local = corr.target.element_at(corr.placement[id]);
        t.labels[static_cast<std::size_t>(local)] = filling.label(id);
    }
    return t;
}

}  // namespace

Tableau to_square_tableau(const Filling& filling)
{
    return apply_correspondence(filling, square_correspondence(filling.book()));
}

Tableau to_skew_tableau(const Filling& filling)
{
    return apply_correspondence(filling, skew_correspondence(filling.book()));
}

Tableau to_truncated_tableau(const Filling& filling)
{
    return apply_correspondence(filling, truncated_correspondence(filling.book()));
}

Filling from_tableau(BookPtr book, const Correspondence& corr, const Tableau& tableau)
{
    std::vector<int> labels(book->total_cells());
    for (std::size_t id = 0; id < labels.size(); ++id) labels[id] = tableau.label_at(corr.placement.at(id));
    return Filling(std::move(book), std::move(labels));
}

}  // namespace youngbook
