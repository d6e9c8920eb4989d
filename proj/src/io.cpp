#include "blowspec/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blowspec {

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

std::string strip(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

[[noreturn]] void edge_list_error(int line, const std::string& what) {
    throw std::invalid_argument("edge list line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string body = strip(text);
    if (body.rfind(kGraph6Header, 0) == 0) {
        body = body.substr(std::string(kGraph6Header).size());
    }
    if (body.empty()) {
        throw std::invalid_argument("graph6: empty input");
    }
    if (body[0] == '~') {
        throw std::invalid_argument("graph6: long form (n > 62) is not supported");
    }
    for (std::size_t i = 0; i < body.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) {
            throw std::invalid_argument("graph6: byte " + std::to_string(i) +
                                        " outside the printable range 63..126");
        }
    }
    const int n = static_cast<unsigned char>(body[0]) - 63;
    if (n < 1) {
        throw std::invalid_argument("graph6: vertex count must be at least 1");
    }
    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (body.size() - 1 < byte_count) {
        throw std::invalid_argument("graph6: truncated bit stream (expected " +
                                    std::to_string(byte_count) + " data bytes, got " +
                                    std::to_string(body.size() - 1) + ")");
    }
    if (body.size() - 1 > byte_count) {
        throw std::invalid_argument("graph6: trailing bytes after a complete graph");
    }

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char byte = static_cast<unsigned char>(body[1 + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1u) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) {
        throw std::invalid_argument("graph6: only graphs with at most 62 vertices can be encoded");
    }
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned int packed = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            packed = (packed << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(packed + 63));
                packed = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        packed <<= (6 - filled);
        out.push_back(static_cast<char>(packed + 63));
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(input, raw)) {
        ++line_no;
        if (const std::size_t hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = strip(raw);
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            fields >> tag;
            if (tag != "n" || !(fields >> n) || n < 1) {
                edge_list_error(line_no, "expected header \"n <count>\" with count >= 1");
            }
            std::string extra;
            if (fields >> extra) {
                edge_list_error(line_no, "unexpected token \"" + extra + "\" after header");
            }
            continue;
        }
        int u = 0;
        int v = 0;
        if (!(fields >> u >> v)) {
            edge_list_error(line_no, "expected an edge \"u v\"");
        }
        std::string extra;
        if (fields >> extra) {
            edge_list_error(line_no, "unexpected token \"" + extra + "\" after edge");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            edge_list_error(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            edge_list_error(line_no, "self-loop on vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
    }
    if (n < 0) {
        throw std::invalid_argument("edge list: missing header \"n <count>\"");
    }
    return Graph(n, edges);
}

std::string format_double(double x) {
    if (!std::isfinite(x)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

namespace {

void append_spectrum(std::string& out, const Spectrum& s) {
    out.push_back('[');
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += format_double(s[i]);
    }
    out.push_back(']');
}

}  // namespace

std::string write_report(const VerificationReport& report) {
    std::string out = "{";
    out += "\"graph_id\":\"" + json_escape(report.graph_id) + "\",";
    out += "\"n\":" + std::to_string(report.n) + ",";
    out += "\"t\":" + std::to_string(report.t) + ",";
    out += "\"tol\":" + format_double(report.tol) + ",";
    out += "\"families\":[";
    for (std::size_t i = 0; i < report.families.size(); ++i) {
        const FamilyRecord& rec = report.families[i];
        if (i > 0) {
            out.push_back(',');
        }
        out += "{\"family\":\"" + json_escape(rec.family) + "\",";
        out += "\"formula\":";
        append_spectrum(out, rec.formula);
        out += ",\"oracle\":";
        append_spectrum(out, rec.oracle);
        out += ",\"max_deviation\":" + format_double(rec.max_deviation) + ",";
        out += std::string("\"pass\":") + (rec.pass ? "true" : "false") + "}";
    }
    out += "],";
    out += "\"eigenvector_residuals\":" + format_double(report.eigenvector_residuals) + ",";
    out += std::string("\"overall_pass\":") + (report.overall_pass ? "true" : "false");
    out += "}";
    return out;
}

}  // namespace blowspec
