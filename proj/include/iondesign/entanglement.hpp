#pragma once

#include <cmath>
#include <stdexcept>

namespace iondesign::core {

/// Qubit-equivalent size of a coherent-state superposition: the motional
/// Hilbert space log2(|alpha|^2 + 1 + |alpha|) plus the internal qubit.
inline double cat_state_qubits(double alpha) {
    if (alpha < 0.0) throw std::domain_error("cat_state_qubits: alpha must be >= 0");
    return std::log2(alpha * alpha + 1.0 + alpha) + 1.0;
}

/// Recorded entangling-efficiency datum: probability that a singlet can be
/// made present in a predetermined Hilbert space at a predetermined time.
struct EntanglementRecord {
    double efficiency = 0.0;  // epsilon, in [0,1]
    double rate = 0.0;        // successful singlets per second
    double cat_alpha = 0.0;
    double cat_qubits = 0.0;
};

inline EntanglementRecord make_entanglement_record(double efficiency, double rate,
                                                   double cat_alpha) {
    if (efficiency < 0.0 || efficiency > 1.0)
        throw std::domain_error("efficiency must be in [0,1]");
    if (rate < 0.0) throw std::domain_error("rate must be >= 0");
    EntanglementRecord r;
    r.efficiency = efficiency;
    r.rate = rate;
    r.cat_alpha = cat_alpha;
    r.cat_qubits = cat_state_qubits(cat_alpha);
    return r;
}

}  // namespace iondesign::core
