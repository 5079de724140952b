#include "egth/matrix_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

#include "egth/errors.hpp"

namespace egth {
namespace {

struct DataLine {
    Index number = 0;  // 1-based line number in the input
    std::vector<std::string> tokens;
};

std::vector<DataLine> data_lines(std::istream& in) {
    std::vector<DataLine> out;
    std::string line;
    Index number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string::size_type pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        DataLine dl;
        dl.number = number;
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) dl.tokens.push_back(tok);
        out.push_back(std::move(dl));
    }
    return out;
}

double parse_double(const std::string& tok, Index line) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "'" + tok + "' is not a decimal literal");
    return v;
}

}  // namespace

MarkovRenewalProcess<double> parse_matrix_document(std::istream& in) {
    const std::vector<DataLine> lines = data_lines(in);
    if (lines.empty()) throw ParseError(1, "empty document");

    const DataLine& head = lines[0];
    if (head.tokens.size() != 1)
        throw ParseError(head.number, "expected the state count alone on the first data line");
    Index n = 0;
    {
        const std::string& tok = head.tokens[0];
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || n < 1)
            throw ParseError(head.number, "state count '" + tok + "' is not a positive integer");
    }

    if (static_cast<Index>(lines.size()) < n + 1)
        throw ParseError(lines.back().number, "expected " + std::to_string(n) + " matrix rows");

    DenseMatrix<double> p(n, n);
    for (Index i = 0; i < n; ++i) {
        const DataLine& dl = lines[static_cast<size_t>(i + 1)];
        if (static_cast<Index>(dl.tokens.size()) != n)
            throw ParseError(dl.number, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(dl.tokens.size()) + " entries, expected " +
                                            std::to_string(n));
        for (Index j = 0; j < n; ++j)
            p(i, j) = parse_double(dl.tokens[static_cast<size_t>(j)], dl.number);
    }

    bool has_mu = false;
    DenseVector<double> mu;
    size_t next = static_cast<size_t>(n + 1);
    if (next < lines.size()) {
        const DataLine& dl = lines[next];
        if (dl.tokens.empty() || dl.tokens[0] != "mu")
            throw ParseError(dl.number, "unexpected content after the matrix rows");
        if (static_cast<Index>(dl.tokens.size()) != n + 1)
            throw ParseError(dl.number, "mu line has " + std::to_string(dl.tokens.size() - 1) +
                                            " entries, expected " + std::to_string(n));
        mu.resize(n);
        for (Index j = 0; j < n; ++j)
            mu(j) = parse_double(dl.tokens[static_cast<size_t>(j + 1)], dl.number);
        has_mu = true;
        ++next;
    }
    if (next < lines.size())
        throw ParseError(lines[next].number, "unexpected content after the document");

    StochasticMatrix<double> sp = StochasticMatrix<double>::validate(std::move(p));
    if (has_mu)
        return MarkovRenewalProcess<double>::with_holding_times(std::move(sp), std::move(mu));
    return MarkovRenewalProcess<double>::chain(std::move(sp));
}

MarkovRenewalProcess<double> parse_matrix_document(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_document(in);
}

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

std::string serialize_matrix_document(const MarkovRenewalProcess<double>& mrp) {
    const Index n = mrp.size();
    std::string out = std::to_string(n) + "\n";
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            out += shortest(mrp.p()(i, j));
        }
        out += '\n';
    }
    if (!mrp.is_chain()) {
        out += "mu";
        for (Index i = 0; i < n; ++i) {
            out += ' ';
            out += shortest(mrp.mu()(i));
        }
        out += '\n';
    }
    return out;
}

}  // namespace egth
