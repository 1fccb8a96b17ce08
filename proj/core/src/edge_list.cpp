#include "signbal/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "signbal/error.hpp"

namespace signbal {

namespace {

struct RawEdge {
    std::string a;
    std::string b;
    double w;
    std::size_t line;
};

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos >= s.size()) break;
        std::size_t end = pos;
        while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
        out.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::optional<std::size_t> parse_index(std::string_view tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_real(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in, std::string_view source) {
    std::optional<std::size_t> declared_n;
    std::vector<RawEdge> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.front().front() == '#' || tokens.front().front() == '%') continue;
        if (tokens.front() == "n") {
            if (!raw.empty()) parse_fail(source, lineno, "node-count line must come before the first edge");
            if (declared_n) parse_fail(source, lineno, "node count declared twice");
            if (tokens.size() != 2) parse_fail(source, lineno, "expected 'n <N>'");
            declared_n = parse_index(tokens[1]);
            if (!declared_n || *declared_n == 0) parse_fail(source, lineno, "node count must be a positive integer");
            continue;
        }
        if (tokens.size() != 3) {
            parse_fail(source, lineno, "expected 'i j w' (three fields), got " + std::to_string(tokens.size()) + ": '" + line + "'");
        }
        const auto w = parse_real(tokens[2]);
        if (!w) parse_fail(source, lineno, "weight '" + std::string(tokens[2]) + "' is not a number");
        raw.push_back({std::string(tokens[0]), std::string(tokens[1]), *w, lineno});
    }
    if (in.bad()) throw Error(ErrorCode::IoError, "read failure on " + std::string(source));

    bool numeric = true;
    for (const auto& e : raw) {
        if (!parse_index(e.a) || !parse_index(e.b)) {
            numeric = false;
            break;
        }
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::vector<std::string> labels;
    std::size_t n = 0;
    if (numeric) {
        std::size_t max_id = 0;
        for (const auto& e : raw) {
            const NodeId i = *parse_index(e.a);
            const NodeId j = *parse_index(e.b);
            max_id = std::max({max_id, i, j});
            edges.push_back({i, j, e.w});
        }
        n = declared_n.value_or(raw.empty() ? 0 : max_id + 1);
        labels.reserve(n);
        for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    } else {
        std::unordered_map<std::string, NodeId> ids;
        auto id_of = [&](const std::string& label) {
            auto [it, inserted] = ids.emplace(label, labels.size());
            if (inserted) labels.push_back(label);
            return it->second;
        };
        for (const auto& e : raw) {
            const NodeId i = id_of(e.a);
            const NodeId j = id_of(e.b);
            edges.push_back({i, j, e.w});
        }
        n = labels.size();
        if (declared_n && *declared_n != n) {
            throw Error(ErrorCode::ParseError, std::string(source) + ": declared n " + std::to_string(*declared_n) +
                                                   " but the edges name " + std::to_string(n) + " distinct labels");
        }
    }
    if (n == 0) throw Error(ErrorCode::ParseError, std::string(source) + ": no edges and no node count");
    return {build_graph(n, std::move(edges)), std::move(labels)};
}

LoadedGraph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return read_edge_list(in, path.string());
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw Error(ErrorCode::IoError, "cannot format value");
    return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const SignedGraph& g, std::span<const std::string> comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "n " << g.node_count() << '\n';
    for (const auto& e : g.edges()) out << e.i << ' ' << e.j << ' ' << format_double(e.w) << '\n';
}

void save_edge_list(const std::filesystem::path& path, const SignedGraph& g, std::span<const std::string> comments) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_edge_list(out, g, comments);
    if (!out) throw Error(ErrorCode::IoError, "write failure on " + path.string());
}

}  // namespace signbal
