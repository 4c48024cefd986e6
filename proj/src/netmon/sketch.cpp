#include "csnet/netmon/sketch.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/solvers/omp.hpp"

#include <istream>
#include <string>

namespace csnet {

Sketch make_sketch(Index m, Index n_keys, std::uint64_t seed) {
    require(m >= 1 && n_keys >= 1, "make_sketch: sizes must be positive");
    Sketch s;
    s.phi = gen_sensing_matrix(Recipe::Gaussian, m, n_keys, seed);
    s.y = Vector::Zero(m);
    s.n_keys = n_keys;
    return s;
}

void sketch_update(Sketch& sketch, Index key, double count) {
    require(key >= 0 && key < sketch.n_keys, "sketch_update: key " + std::to_string(key) + " out of range");
    sketch.y += count * sketch.phi.entries.col(key);
}

std::vector<std::pair<Index, double>> sketch_recover(const Sketch& sketch, int k) {
    require(k >= 1 && k <= sketch.y.size(), "sketch_recover: need 1 <= k <= m");
    const Vector norms = column_norms(sketch.phi.entries);
    const auto r = omp(normalize_columns(sketch.phi.entries), sketch.y, 0.0, k);
    std::vector<std::pair<Index, double>> out;
    for (Index i : r.support) out.emplace_back(i, r.estimate(i) / norms(i));
    return out;
}

std::vector<Index> read_stream(std::istream& in) {
    std::vector<Index> keys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::size_t used = 0;
        long long key = 0;
        try {
            key = std::stoll(line, &used);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidParameter, "read_stream: bad key '" + line + "'");
        }
        require(key >= 0 && line.find_first_not_of(" \t\r", used) == std::string::npos,
                "read_stream: bad key '" + line + "'");
        keys.push_back(static_cast<Index>(key));
    }
    return keys;
}

}  // namespace csnet
