// Generated by tests/tools/gen_reference_values.py -- do not edit by hand.
#pragma once

#include <complex>

namespace refvals {

inline constexpr std::complex<double> kHkdf5{-2.76988, -2.35684};
inline constexpr std::complex<double> kHkdf2_32{-0.36, -0.8};
inline constexpr std::complex<double> kIncomplete0_23{-0.10357, 0.0};
inline constexpr std::complex<double> kIncomplete1_23{-0.22479864, 0.0};
inline constexpr std::complex<double> kMehler{1.2628179460646868, 0.0};
inline constexpr std::complex<double> kLaguerre3_2{4.1678333333333333, 0.0};
inline constexpr std::complex<double> kEntryK41{0.68000349305658325, 0.70760571786803302};

inline constexpr std::complex<double> kExpTestInput[36] = {
    {0.3, -0.2}, {0.7, 0.2}, {-0.4, 0.5}, {0.1, -0.6}, {0.9, 0.0}, {0.0, 0.8},
    {0.0, 0.0}, {-0.5, 0.1}, {-0.3, -0.1}, {0.5, 0.4}, {-0.2, 0.3}, {0.6, -0.5},
    {0.0, 0.0}, {0.0, 0.0}, {0.2, 0.4}, {0.2, 0.7}, {-0.8, 0.1}, {0.4, -0.4},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, -0.3}, {0.3, 0.6}, {-0.6, -0.2},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.6, 0.0}, {0.1, 0.9},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-0.1, 0.5},
};

inline constexpr std::complex<double> kExpTestOutput[36] = {
    {1.3229515021098725, -0.26817554596894384}, {0.65938998226610636, 0.13949735840606134}, {-0.6527380839231025, 0.50740269029595922}, {-0.15204943493434935, -0.67133695874835916}, {1.7649877365914037, -0.45190678036076529}, {0.11709147995382545, 1.7997202861468272},
    {0.0, 0.0}, {0.60350053278289911, 0.060552028060166879}, {-0.23010053372501547, -0.15377687607032371}, {0.43655401520132615, 0.16166714385904616}, {-0.10570577964547871, 0.58753103339451783}, {0.16563525806639103, -0.40295163390267552},
    {0.0, 0.0}, {0.0, 0.0}, {1.1249864385088715, 0.47563663737394687}, {0.16964994938326547, 0.77115684403528644}, {-1.4429031084940881, 0.13125249444331624}, {0.58606634024736296, -0.95454472564815338},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.95533648912560602, -0.29552020666133958}, {0.51611372501511862, 0.75648555208801343}, {-0.8484927688667354, -0.059675283473604602},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.822118800390509, 0.0}, {-0.12928817021217008, 1.1674571901763137},
    {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.79406953941426754, 0.4338021664911263},
};

}  // namespace refvals
