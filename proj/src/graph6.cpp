#include "minorlab/graph6.hpp"

#include <vector>

namespace minorlab {

namespace {

void append_bits(std::string& out, int& bitpos, unsigned char& cur, bool bit) {
    cur = static_cast<unsigned char>(cur << 1 | (bit ? 1 : 0));
    if (++bitpos == 6) {
        out.push_back(static_cast<char>(cur + 63));
        bitpos = 0;
        cur = 0;
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int bitpos = 0;
    unsigned char cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            append_bits(out, bitpos, cur, g.has_edge(i, j));
    if (bitpos > 0) {
        cur = static_cast<unsigned char>(cur << (6 - bitpos));
        out.push_back(static_cast<char>(cur + 63));
    }
    return out;
}

Graph graph6_decode(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size())
            throw Graph6Error("graph6: truncated input at offset " + std::to_string(pos));
    };
    auto val = [&](size_t at) -> long long {
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: byte out of range at offset " + std::to_string(at));
        return c - 63;
    };
    need(1);
    long long n;
    if (s[pos] == 126) {
        need(2);
        if (s[pos + 1] == 126) {
            need(8);
            n = 0;
            for (int k = 2; k < 8; ++k) n = n << 6 | val(pos + k);
            pos += 8;
        } else {
            need(4);
            n = 0;
            for (int k = 1; k < 4; ++k) n = n << 6 | val(pos + k);
            pos += 4;
        }
    } else {
        n = val(pos);
        pos += 1;
    }
    if (n > 100000) throw Graph6Error("graph6: vertex count too large");
    long long bits = n * (n - 1) / 2;
    long long bytes = (bits + 5) / 6;
    need(static_cast<size_t>(bytes));
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            long long byte = bit / 6;
            int shift = 5 - static_cast<int>(bit % 6);
            if ((val(pos + byte) >> shift) & 1) g.add_edge(i, j);
        }
    }
    pos += static_cast<size_t>(bytes);
    if (pos != s.size())
        throw Graph6Error("graph6: trailing bytes at offset " + std::to_string(pos));
    return g;
}

}  // namespace minorlab
