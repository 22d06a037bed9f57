// Python module _core: rank, unrank, count and enumerate.

#include "unlabelled/enclosing_rank.hpp"
#include "unlabelled/necklace_rank.hpp"
#include "unlabelled/oracle.hpp"
#include "unlabelled/symmetric_rank.hpp"
#include "unlabelled/unlabelled_rank.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace unlabelled;

namespace {

py::int_ to_py(const Count& c) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10))); }

Count from_py(const py::int_& k) {
    const std::string text = py::str(k);
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("rank must be nonnegative");
    return Count(text);
}

std::size_t length_or(const Word& w, std::size_t m) { return m == 0 ? w.size() : m; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rank, unrank and count binary unlabelled necklaces";
    py::register_exception<ConventionError>(m, "ConventionError", PyExc_ArithmeticError);

    m.def(
        "rank",
        [](const std::string& word, std::size_t length) {
            const Word w = Word::parse(word);
            const RankBreakdown b = rank_unlabelled(w, length_or(w, length));
            py::dict out;
            out["rank_total"] = to_py(b.rank_total);
            out["rank_necklace"] = to_py(b.rank_necklace);
            out["rank_symmetric"] = to_py(b.rank_symmetric);
            out["rank_enclosing"] = to_py(b.rank_enclosing);
            out["rank_asymmetric"] = to_py(b.rank_asymmetric);
            return out;
        },
        py::arg("word"), py::arg("length") = 0,
        "Rank components of a canonical word among classes of the given length (0 means len(word)).");
    m.def(
        "unrank", [](const py::int_& k, std::size_t n) { return unrank_unlabelled(from_py(k), n).str(); }, py::arg("k"),
        py::arg("n"), "Canonical representative of rank k among length-n classes.");
    m.def(
        "count", [](std::size_t n) { return to_py(count_unlabelled(n)); }, py::arg("n"));
    m.def(
        "count_lyndon", [](std::size_t n) { return to_py(count_unlabelled_lyndon(n)); }, py::arg("n"));
    m.def(
        "canonical", [](const std::string& word) { return canonical_unlabelled(Word::parse(word)).str(); },
        py::arg("word"), "Canonical unlabelled representative of a word's class.");
    m.def(
        "rank_necklaces",
        [](const std::string& word, std::size_t length) {
            const Word w = Word::parse(word);
            return to_py(rank_necklaces(w, length_or(w, length)));
        },
        py::arg("word"), py::arg("length") = 0);
    m.def(
        "enumerate",
        [](std::size_t n) {
            std::vector<std::string> out;
            for (const auto& c : oracle::enumerate_classes(n).classes) out.push_back(c.representative.str());
            return out;
        },
        py::arg("n"), "Class representatives of length n (at most 16) in ascending order.");
}
