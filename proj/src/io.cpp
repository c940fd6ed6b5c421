#include "lcsx/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace lcsx {

const char* format_name(token_format f) { return f == token_format::tokens ? "tokens" : "u32"; }

token_format format_from_name(const std::string& name) {
    if (name == "tokens") return token_format::tokens;
    if (name == "u32") return token_format::u32;
    throw std::invalid_argument("unknown token format: " + name);
}

std::vector<std::string> read_tokens_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::vector<std::uint32_t> read_u32_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::vector<std::uint32_t> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string field = line.substr(begin, end - begin + 1);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(field, &used);
            if (used != field.size() || v > 0xffffffffULL) throw std::invalid_argument(field);
            values.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw parse_error("not an unsigned 32-bit integer: '" + field + "' in " + path, line_no);
        }
    }
    return values;
}

void write_tokens_file(const std::string& path, const std::vector<std::string>& tokens) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out << ' ';
        out << tokens[i];
    }
    out << '\n';
}

void write_u32_file(const std::string& path, const std::vector<std::uint32_t>& values) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    for (std::uint32_t v : values) out << v << '\n';
}

loaded_pair load_pair(const std::string& path_x, const std::string& path_y, token_format fmt) {
    loaded_pair out;
    if (fmt == token_format::tokens) {
        std::vector<std::string> tx = read_tokens_file(path_x);
        std::vector<std::string> ty = read_tokens_file(path_y);
        auto interned = intern<std::string>(tx, ty);
        out.x = std::move(interned.x);
        out.y = std::move(interned.y);
        out.vocabulary = std::move(interned.vocabulary);
    } else {
        std::vector<std::uint32_t> tx = read_u32_file(path_x);
        std::vector<std::uint32_t> ty = read_u32_file(path_y);
        auto interned = intern<std::uint32_t>(tx, ty);
        out.x = std::move(interned.x);
        out.y = std::move(interned.y);
        out.vocabulary.reserve(interned.vocabulary.size());
        for (std::uint32_t v : interned.vocabulary) out.vocabulary.push_back(std::to_string(v));
    }
    return out;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

std::string run_record_to_json(const run_record& rec) {
    nlohmann::json j;
    j["instance"] = {{"file_x", rec.file_x},
                     {"file_y", rec.file_y},
                     {"digest_x", rec.digest_x},
                     {"digest_y", rec.digest_y}};
    j["algorithm"] = rec.algorithm;
    if (!rec.alds.empty()) j["alds"] = rec.alds;
    j["n"] = rec.n;
    j["len_x"] = rec.len_x;
    j["len_y"] = rec.len_y;
    j["output_len"] = rec.output_len;
    if (rec.exact_len) j["exact_len"] = *rec.exact_len;
    if (rec.ratio) j["ratio"] = *rec.ratio;
    j["bound_4n45"] = rec.bound_4n45;
    j["bound_n34log"] = rec.bound_n34log;
    j["wall_ms"] = rec.wall_ms;
    nlohmann::json passes = nlohmann::json::array();
    for (const pass_trace& p : rec.passes) {
        nlohmann::json iters = nlohmann::json::array();
        for (const iteration_trace& it : p.iterations)
            iters.push_back({{"alds_len", it.alds_len},
                             {"candidate_len", it.candidate_len},
                             {"deleted", it.deleted}});
        passes.push_back({{"f", p.band_lo},
                          {"x_len", p.x_len},
                          {"best_match_len", p.best_match_len},
                          {"lis_pi_len", p.lis_pi_len},
                          {"best_len", p.best_len},
                          {"iterations", std::move(iters)}});
    }
    j["passes"] = std::move(passes);
    j["witness"] = {{"tokens", rec.witness_tokens},
                    {"idx_x", rec.witness.idx_x},
                    {"idx_y", rec.witness.idx_y}};
    return j.dump(2);
}

void write_run_record(const std::string& path, const run_record& rec) {
    std::string text = run_record_to_json(rec);
    if (path == "-" || path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << text << '\n';
}

}  // namespace lcsx
