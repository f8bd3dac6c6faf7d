#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symdyn {

/// A letter: a non-empty text token with no whitespace and no leading '#'.
/// Composite letters ("[b,a,b]", tuple names, ...) are ordinary symbols.
class Symbol {
public:
    explicit Symbol(std::string name);

    const std::string& name() const noexcept { return name_; }

    auto operator<=>(const Symbol&) const = default;

private:
    std::string name_;
};

/// Ordered set of symbols. Iteration order is the declaration order;
/// duplicates collapse to their first occurrence.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    bool contains(const Symbol& s) const { return index_.count(s.name()) != 0; }
    std::size_t index_of(const Symbol& s) const;
    const Symbol& at(std::size_t i) const { return symbols_.at(i); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Non-empty finite sequence of symbols.
class Word {
public:
    explicit Word(std::vector<Symbol> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    const Symbol& operator[](std::size_t i) const { return letters_[i]; }
    const Symbol& front() const { return letters_.front(); }
    const Symbol& back() const { return letters_.back(); }
    const std::vector<Symbol>& letters() const noexcept { return letters_; }

    /// Factor of length `len` starting at `pos`.
    Word sub(std::size_t pos, std::size_t len) const;

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Tokens joined by single spaces.
    std::string str() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Symbol> letters_;
};

/// Anything with a factor language: finite word sets and SFT languages.
/// language(n) returns L_n; L_1 letters are all drawn from alphabet().
class LanguageSource {
public:
    virtual ~LanguageSource() = default;
    virtual const Alphabet& alphabet() const noexcept = 0;
    virtual std::set<Word> language(std::size_t n) const = 0;
};

/// Finite set of words. Words keep their input order (duplicates collapse);
/// the alphabet is exactly the set of occurring letters, in order of first
/// occurrence.
class FiniteWordSet final : public LanguageSource {
public:
    FiniteWordSet() = default;
    explicit FiniteWordSet(std::vector<Word> words);

    const std::vector<Word>& words() const noexcept { return words_; }
    bool empty() const noexcept { return words_.empty(); }

    const Alphabet& alphabet() const noexcept override { return alphabet_; }
    std::set<Word> language(std::size_t n) const override;

    /// Set equality; word order is ignored.
    bool operator==(const FiniteWordSet& other) const;

private:
    std::vector<Word> words_;
    Alphabet alphabet_;
};

/// L_n(ws): all length-n factors of the words.
std::set<Word> subwords(const FiniteWordSet& ws, std::size_t n);

/// True iff every w in L_n(src) extends on both sides inside L_{n+1}(src).
bool is_n_prolongeable(const LanguageSource& src, std::size_t n);

/// Total letter-to-letter map between alphabets, applied letterwise.
class Projection {
public:
    Projection(Alphabet source, Alphabet target, std::map<Symbol, Symbol> map);

    static Projection identity(const Alphabet& a);

    const Alphabet& source() const noexcept { return source_; }
    const Alphabet& target() const noexcept { return target_; }
    const std::map<Symbol, Symbol>& mapping() const noexcept { return map_; }

    const Symbol& operator()(const Symbol& s) const;
    Word operator()(const Word& w) const;
    FiniteWordSet operator()(const FiniteWordSet& ws) const;

    bool is_bijective() const;
    /// Inverse map; requires is_bijective().
    Projection inverted() const;

private:
    Alphabet source_;
    Alphabet target_;
    std::map<Symbol, Symbol> map_;
};

/// outer ∘ inner; inner's image letters must lie in outer's source alphabet.
Projection compose(const Projection& outer, const Projection& inner);

/// p applied to every word of ws; ws's letters must all lie in p's source.
FiniteWordSet apply_projection(const Projection& p, const FiniteWordSet& ws);

/// Deterministic backtracking search for a (possibly collapsing) letter map
/// with phi(x) = y as word sets. Letters are tried in x's alphabet order,
/// candidate images in y's alphabet order.
std::optional<Projection> find_projection(const FiniteWordSet& x, const FiniteWordSet& y);

/// Bijective witness for x ≍ y (equality up to renaming letters), if any.
std::optional<Projection> are_similar(const FiniteWordSet& x, const FiniteWordSet& y);

} // namespace symdyn
