#include "stohf/reference_data.hpp"

#include <sstream>
#include <stdexcept>

namespace stohf {

namespace {

const std::array<ReferenceRow, 9> kTable = {{
    {2, "He", "1s2 1S", 1.6875, {}, {}, -2.84766, -2.86168, -2.903385},
    {3, "Li", "1s2 2s1 2S", 2.69372, 0.766676, {}, -7.41385, -7.43273,
     -7.477976},
    {4, "Be", "1s2 2s2 1S", 3.70767, 1.15954, {}, -14.5300, -14.5730,
     -14.668449},
    {5, "B", "1s2 2s2 2p1 2P", 4.71099, 1.57921, 1.18716, -24.4506, -24.5291,
     -24.658211},
    {6, "C", "1s2 2s2 2p2 3P", 5.71244, 1.98775, 1.51874, -37.5471, -37.5471,
     -37.855668},
    {7, "N", "1s2 2s2 2p3 4S", 6.71293, 2.39148, 1.84551, -53.9624, -54.4009,
     -54.611893},
    {8, "O", "1s2 2s2 2p4 3P", 7.71286, 2.79267, 2.16972, -74.1624, -74.8094,
     -75.109991},
    {9, "F", "1s2 2s2 2p5 2P", 8.71243, 3.19236, 2.49238, -98.3972, -99.4093,
     -99.803888},
    {10, "Ne", "1s2 2s2 2p6 1S", 9.71176, 3.59108, 2.81404, -126.971,
     -128.547, -128.830462},
}};

}  // namespace

const std::array<ReferenceRow, 9>& reference_table() { return kTable; }

const ReferenceRow& reference_row(int Z) {
    if (Z < 2 || Z > 10) throw std::invalid_argument("Z must be in [2, 10]");
    return kTable[Z - 2];
}

std::string reference_table_text() {
    std::ostringstream os;
    os << "# Z symbol configuration alpha beta gamma E_calc E_bestHF "
          "E_exact\n";
    os.precision(10);
    for (const auto& row : kTable) {
        std::string conf = row.configuration;
        for (auto& c : conf)
            if (c == ' ') c = '_';
        os << row.Z << ' ' << row.symbol << ' ' << conf << ' ' << row.alpha
           << ' ';
        os << (row.beta ? std::to_string(*row.beta) : std::string("-")) << ' ';
        os << (row.gamma ? std::to_string(*row.gamma) : std::string("-"))
           << ' ';
        os << row.e_calc << ' ' << row.e_best_hf << ' ' << row.e_exact
           << '\n';
    }
    return os.str();
}

std::array<ReferenceRow, 9> parse_reference_table(const std::string& text) {
    std::array<ReferenceRow, 9> rows;
    std::istringstream is(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (n >= rows.size())
            throw std::runtime_error("too many reference rows");
        std::istringstream ls(line);
        ReferenceRow& row = rows[n];
        std::string beta_s, gamma_s, conf;
        if (!(ls >> row.Z >> row.symbol >> conf >> row.alpha >> beta_s >>
              gamma_s >> row.e_calc >> row.e_best_hf >> row.e_exact))
            throw std::runtime_error("malformed reference row: " + line);
        for (auto& c : conf)
            if (c == '_') c = ' ';
        row.configuration = conf;
        if (beta_s != "-") row.beta = std::stod(beta_s);
        if (gamma_s != "-") row.gamma = std::stod(gamma_s);
        ++n;
    }
    if (n != rows.size()) throw std::runtime_error("missing reference rows");
    return rows;
}

}  // namespace stohf
