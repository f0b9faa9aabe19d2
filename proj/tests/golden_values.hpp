// Generated by tests/oracles/generate_golden.py. Do not edit by hand.
#pragma once

#include <array>

namespace gensmooth::golden {

inline constexpr double kKernelA_06_03_11 = 0.87307649779697448926;
inline constexpr double kKernelB_06_03_11 = 0.46596443783978864526;
inline constexpr double kKernelValue_06_03_11 = 0.74164799934221105668;
inline constexpr double kTranslateX_t05_x0 = 2.3796616708544447283e-48;
inline constexpr double kTranslateX_t05_x03 = 0.18982430570133543748;
inline constexpr double kTranslateExp_t07_xm04 = 0.94097634470157181359;
inline constexpr double kTranslateAbs_t04_x02 = 0.24891025773455370089;
inline constexpr double kTranslateAbs_tm03_xm07 = 0.60620662716377260968;

// E_8(absx)_{2,1}, dense least squares
inline constexpr double kL2AbsN8Alpha1 = 0.024091828729220045;
inline constexpr std::array<double, 8> kL2AbsAlpha1 = {0.21957752590132457, 0.21957752590132457, 0.06533739386600645, 0.06533739386600645, 0.03614878782781751, 0.03614878782781751, 0.024091828729220045, 0.024091828729220045};

// grid LP, p = inf, alpha = 1, n = 1..8
inline constexpr std::array<double, 8> kLinfAbsAlpha1 = {0.23811818860734987, 0.23811818860735, 0.08048314543313713, 0.08048314543313717, 0.049712990692526104, 0.04971299069252563, 0.03628368724206745, 0.03628368724206746};
inline constexpr std::array<double, 8> kLinfExpAlpha1 = {0.4291788879409261, 0.09233228635991632, 0.014155603445827511, 0.00167709333987597, 0.00016154424622689178, 1.3094254296840637e-05, 9.1555809857431e-07, 5.626017259372673e-08};
inline constexpr std::array<double, 8> kLinfRungeAlpha1 = {0.37079769386351724, 0.37079769386351724, 0.23852210003377577, 0.23852210003377566, 0.15761559456915875, 0.15761559456915641, 0.10498790799267854, 0.10498790799267833};
inline constexpr double kLinfAbsN6Alpha1 = 0.04971299069252563;

// grid LP, p = 1, alpha = 0.75, n = 1..8
inline constexpr std::array<double, 8> kL1AbsAlpha075 = {0.3085241020053092, 0.3085241020053092, 0.08187598463346454, 0.08187598463346454, 0.04098372733212405, 0.04098372733212405, 0.02511624833006909, 0.025116248330069094};
inline constexpr std::array<double, 8> kL1ExpAlpha075 = {0.6069972626278894, 0.13351666058352635, 0.02060048669396056, 0.002443875236493119, 0.00023528195482330853, 1.9048451639611504e-05, 1.3299968404255669e-06, 8.160980200751948e-08};
inline constexpr std::array<double, 8> kL1RungeAlpha075 = {0.34109975291077854, 0.34109975291077854, 0.23153060296747333, 0.2315306029674733, 0.15607804721503168, 0.15607804721503168, 0.10484080280371014, 0.10484080280371012};

// modulus reference, 257-point t grid
inline constexpr double kModulusX_d025_p2_a1 = 0.036406043904450035;
inline constexpr std::array<double, 4> kModulusAbsCurve_p2_a1 = {0.0025175266403237506, 0.007280410553263068, 0.021348143275233242, 0.06315522537166957};

}  // namespace gensmooth::golden
