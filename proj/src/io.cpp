#include "rba/io.hpp"

#include <fstream>
#include <sstream>

namespace rba {

std::string serialize_instance(const ColoredInstance& inst) {
    std::ostringstream out;
    out << "rba 1 " << inst.n() << " " << inst.k() << "\n";
    for (const ColoredArc& a : inst.all_arcs())
        out << a.color << " " << a.tail << " " << a.head << "\n";
    return out.str();
}

ColoredInstance parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    int n = 0, k = 0;
    std::vector<ColoredArc> arcs;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ss(line);
        if (!header_seen) {
            std::string magic;
            int version = 0;
            if (!(ss >> magic)) continue;  // blank line
            if (magic != "rba" || !(ss >> version >> n >> k))
                throw ParseError("expected header \"rba 1 <n> <k>\"", line_no);
            if (version != 1) throw ParseError("unsupported format version", line_no);
            std::string extra;
            if (ss >> extra) throw ParseError("trailing tokens after header", line_no);
            header_seen = true;
            continue;
        }
        ColoredArc a;
        if (!(ss >> a.color >> a.tail >> a.head)) {
            std::string word;
            std::istringstream probe(line);
            if (!(probe >> word)) continue;  // blank line
            throw ParseError("expected arc line \"<color> <tail> <head>\"", line_no);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens after arc", line_no);
        arcs.push_back(a);
    }
    if (!header_seen) throw ParseError("missing header \"rba 1 <n> <k>\"", line_no);
    return validate_instance(arcs, n, k);
}

ColoredInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

ColoredInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_instance(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string instance_digest(const ColoredInstance& inst) {
    return digest_hex(serialize_instance(inst));
}

}  // namespace rba
