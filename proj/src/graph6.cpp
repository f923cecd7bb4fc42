#include "tokens/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace tokens {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126) throw std::invalid_argument("graph6: byte out of range");
    return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    int first = decode_byte(text[pos++]);
    if (first < 63) {
        n = first;
    } else {
        // 126 introduces the 18-bit form; a second 126 would mean the 36-bit
        // form, which is far beyond anything this tool handles.
        if (pos + 3 > text.size()) throw std::invalid_argument("graph6: truncated order field");
        if (text[pos] == '~') throw std::invalid_argument("graph6: order too large");
        for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text[pos++]);
    }
    if (n > 100000) throw std::invalid_argument("graph6: order too large");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - pos != need)
        throw std::invalid_argument("graph6: body length mismatch");

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    int current = 0;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u, ++bit) {
            if (bit % 6 == 0) current = decode_byte(text[pos + bit / 6]);
            if (current & (1 << (5 - bit % 6))) g.add_edge(u, v);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (; bit < need * 6; ++bit) {
        if (bit % 6 == 0) current = decode_byte(text[pos + bit / 6]);
        if (current & (1 << (5 - bit % 6)))
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("emit_graph6: order too large");
    }
    int acc = 0;
    int used = 0;
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.rfind(kHeader, 0) == 0) line.erase(0, kHeader.size());
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::vector<Graph> graphs;
    for (const auto& line : read_graph6_lines(path)) graphs.push_back(parse_graph6(line));
    return graphs;
}

}  // namespace tokens
