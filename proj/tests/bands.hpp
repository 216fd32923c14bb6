#pragma once

// Regression-locked constants. Each band was measured once with the default
// parameters and widened by 5 percent; the tests assert stability against
// these numbers, not asymptotic constants.

#include <string>
#include <vector>

namespace bands {

struct RatioBand {
    std::string bound;
    double beta;
    double lo;
    double hi;
};

// min/max of the bound ratios over n in {64, 128, 256, 512}
inline const std::vector<RatioBand> kAppendixABands{
    {"der_der", 0.300, 0.01251, 0.49},
    {"derider_first", 0.300, 0.1582, 0.5748},
    {"derider_second", 0.300, 0.135, 0.4171},
    {"poly1_im", 0.300, 0.01251, 0.5217},
    {"poly1_im_small", 0.300, 0.3131, 0.3466},
    {"poly1_re", 0.300, 0.8195, 1.06},
    {"poly2_im", 0.300, 0.0006162, 0.6215},
    {"poly2_im_small", 0.300, 0.2444, 0.2708},
    {"poly2_re", 0.300, 0.7881, 1.355},
    {"der_der", 0.375, 0.02238, 0.5785},
    {"derider_first", 0.375, 0.2298, 0.6981},
    {"derider_second", 0.375, 0.1651, 0.5192},
    {"poly1_im", 0.375, 0.02238, 0.6293},
    {"poly1_im_small", 0.375, 0.3966, 0.4391},
    {"poly1_re", 0.375, 0.7841, 1.05},
    {"poly2_im", 0.375, 0.0005207, 0.7848},
    {"poly2_im_small", 0.375, 0.2916, 0.3234},
    {"poly2_re", 0.375, 0.692, 1.423},
    {"der_der", 0.500, 0.05366, 0.7047},
    {"derider_first", 0.500, 0.3455, 0.8823},
    {"derider_second", 0.500, 0.21, 0.6802},
    {"poly1_im", 0.500, 0.05366, 0.7842},
    {"poly1_im_small", 0.500, 0.5349, 0.5923},
    {"poly1_re", 0.500, 0.7186, 1.05},
    {"der_der", 0.750, 0.2487, 0.8997},
    {"derider_first", 0.750, 0.43, 1.165},
    {"derider_second", 0.750, 0.2768, 0.9504},
    {"poly1_im", 0.750, 0.2487, 0.9916},
    {"poly1_im_small", 0.750, 0.7849, 0.8687},
    {"poly1_re", 0.750, 0.424, 1.05},
};

// max |phase'| / m of the constructed Q_m over |theta| < 0.3; measured
// 0.2576 (m = 16) rising to 0.2793 (m = 1024)
inline constexpr double kPhaseBoundMax = 0.30;

// G_m(theta) (m^2 theta^2 + 1) / m over m in {8, ..., 512}; measured 12.03
inline constexpr double kShiftedFejerConstant = 12.7;

// Construction, n in {128, ..., 2048}
inline constexpr double kCnMin = 1.70, kCnMax = 2.00;            // 1.769 .. 1.931
inline constexpr double kFOneOverNMin = 0.149, kFOneOverNMax = 0.322;  // 0.157 .. 0.306
inline constexpr double kFThetaMin = 0.114, kFThetaMax = 0.784;  // |F(e^{it})| |t|, 1/n < |t| < 0.3
inline constexpr double kSigmaMedianMin = 0.015, kSigmaMedianMax = 0.035;  // 2 pi sigma', 0.0159 .. 0.0326
inline constexpr double kC1Min = 16.2, kC1Max = 24.1;            // 17.10 .. 22.92
inline constexpr double kFOverQMax = 3.94;                       // 3.732 .. 3.747
inline constexpr double kFAwayMin = 0.163;                       // 0.172 .. 0.318

// Entropy, n in {128, ..., 2048}: values 1.632 .. 1.592, slope -0.0153
inline constexpr double kEntropyOverLogNMin = 0.199;  // 0.2088 at n = 2048
inline constexpr double kEntropySlopeMin = -0.0161, kEntropySlopeMax = -0.0145;
inline constexpr double kEnvelopeExcessMax = -0.187;  // max(log max|phi_n| - log(n) / 2) = -0.1968

}  // namespace bands
