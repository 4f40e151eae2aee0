#pragma once

// Polynomial data for the normal-distribution kernels. Coefficients are
// Chebyshev interpolants converted to monomial form in the normalized
// variable u = (2x - (a+b))/(b-a); generated offline and frozen.

namespace msb::kernels::detail {

inline constexpr double PHI_CENTER_A = 0.0;
inline constexpr double PHI_CENTER_B = 1.0;
inline constexpr int PHI_CENTER_N = 15;
inline constexpr double PHI_CENTER[15] = {
    0.36804899320837464,
    -0.02867621641572344,
    0.002088627288234594,
    -0.00012231148823232997,
    5.884348955590905e-06,
    -2.390038976469225e-07,
    8.382316076975145e-09,
    -2.5841528221367515e-10,
    7.1029541965705085e-12,
    -1.7608527238232893e-13,
    3.974499790479543e-15,
    -8.232910096521072e-17,
    1.5756026097112307e-18,
    -2.804647497792293e-20,
    4.657115724096514e-22,
};

inline constexpr int PHI_TAIL_NSEG = 5;
inline constexpr int PHI_TAIL_N = 21;
inline constexpr double PHI_TAIL_EDGES[] = { 1.0, 2.2, 4.2, 8.5, 17.0, 37.8 };
// coefficient layout: [coeff][segment] for vectorized gather
inline constexpr double PHI_TAIL_COEF[21 * 5] = {
    0.19709330945968925, 0.11498248082183177, 0.061371080274185565, 0.031100560591563298, 0.014540620627952446,
    -0.050155791159557914, -0.030998341771571014, -0.01985722941976186, -0.010243064650752616, -0.0055044620335706305,
    0.011402015946156273, 0.007893893576402257, 0.006293496957061939, 0.003353904961226694, 0.0020810130164317705,
    -0.0023700498363769433, -0.0019126274423612649, -0.001956025262187253, -0.00109187672258434, -0.0007857147962490175,
    0.0004573694744235984, 0.00044337144021155224, 0.0005967636980026605, 0.0003534596143042486, 0.00029626988295262073,
    -8.282864912980904e-05, -9.8767766736856e-05, -0.00017888207749092592, -0.00011378609027452513, -0.000111569302166953,
    1.4189584604646457e-05, 2.1219097775599775e-05, 5.272543849979546e-05, 3.6430085743850566e-05, 4.196031643228195e-05,
    -2.313758923753183e-06, -4.409521979311567e-06, -1.529262206086866e-05, -1.1600855295150424e-05, -1.576057510533062e-05,
    3.6088023635876106e-07, 8.88578430244478e-07, 4.367602191572472e-06, 3.674637379457979e-06, 5.912160464894924e-06,
    -5.405646507059942e-08, -1.7400788897969598e-07, -1.229050461005137e-06, -1.1578907314016329e-06, -2.214892872507972e-06,
    7.802267861883071e-09, 3.317531846186216e-08, 3.4096254807290056e-07, 3.629814815719858e-07, 8.287350176479382e-07,
    -1.0881954839449732e-09, -6.167897886999067e-09, -9.330038389662386e-08, -1.1321994378899823e-07, -3.098711631937148e-07,
    1.4701239790919565e-10, 1.1198373606102824e-09, 2.519418002444292e-08, 3.5136705001374166e-08, 1.1564783031982234e-07,
    -1.9278335549823453e-11, -1.9880013066355882e-10, -6.714924601844519e-09, -1.0836728381310397e-08, -4.273358801270673e-08,
    2.458374314197158e-12, 3.454787061593199e-11, 1.7681738519364421e-09, 3.3304543937615155e-09, 1.5910196445153766e-08,
    -3.053550692508938e-13, -5.8847883698334605e-12, -4.6232567825715706e-10, -1.0367105890281506e-09, -6.39947508931229e-09,
    3.6993941797280265e-14, 9.828623393988059e-13, 1.1885497464637663e-10, 3.154182349607957e-10, 2.3749556967676008e-09,
    -4.368556607753861e-15, -1.5983644725990417e-13, -2.8396852025958254e-11, -8.117552357814686e-11, -4.964545464817738e-10,
    5.054982544171825e-16, 2.575787016555654e-14, 7.160611891455165e-12, 2.4562601787648852e-11, 1.846705993274036e-10,
    -6.110690380668573e-17, -4.660527002651889e-15, -2.593203741806004e-12, -1.3773133290035951e-11, -2.3920158074748845e-10,
    6.7635897492783594e-18, 7.231671200583916e-16, 6.345106841664857e-13, 4.098623828765176e-12, 8.82168935138241e-11,
};

inline constexpr double EXP_CORE_A = -0.34658;
inline constexpr double EXP_CORE_B = 0.34658;
inline constexpr int EXP_CORE_N = 13;
inline constexpr double EXP_CORE[13] = {
    1.0,
    0.34658,
    0.0600588482,
    0.006938398536385349,
    0.0006011775411851075,
    4.167122244466783e-05,
    2.40706871248276e-06,
    1.1917741103292996e-07,
    5.1630633818935044e-09,
    1.9882315354159278e-10,
    6.8908195938622525e-12,
    2.1765539566874842e-13,
    6.2840044185650245e-15,
};

inline constexpr double LOG_CORE_A = 0.0;
inline constexpr double LOG_CORE_B = 0.029437254466584566;
inline constexpr int LOG_CORE_N = 11;
inline constexpr double LOG_CORE[11] = {
    1.0049499974698042,
    0.004994251999008515,
    4.472607422492054e-05,
    4.770189051341087e-07,
    5.5407471303307926e-09,
    6.770728018115532e-11,
    8.557086090995644e-13,
    1.1077319119009091e-14,
    1.4599713129831157e-16,
    1.9522468843204516e-18,
    2.6384765926242288e-20,
};

}  // namespace msb::kernels::detail
