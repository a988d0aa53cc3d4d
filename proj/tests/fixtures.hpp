#pragma once

// Frozen inputs and reference values for the regression fixtures: two example
// line families (a 5-machine line in 34 configurations, a 10-machine line in
// 27) with their decomposition reference rows and simulated-throughput
// reference intervals.

#include <vector>

#include "ebline/line.hpp"

namespace ebline::fixtures {

struct Example1Case {
  const char* name;
  double p[5];
  int c[4];
};

struct Reference1Row {
  double y[4];
  double nu;
  double theta[3];
};

struct Example2Case {
  const char* name;
  double p[10];
  int c[9];
};

struct Reference2Row {
  double y[9];
  double nu;
  double theta[8];
};

struct Interval {
  double mean;
  double half_width;
};

inline constexpr Example1Case kExample1[34] = {
    {"1", {0.6, 0.6, 0.6, 0.6, 0.6}, {1, 1, 1, 1}},
    {"2", {0.6, 0.6, 0.6, 0.6, 0.6}, {5, 5, 5, 5}},
    {"3", {0.6, 0.6, 0.6, 0.6, 0.6}, {10, 10, 10, 10}},
    {"4", {0.6, 0.6, 0.6, 0.6, 0.6}, {15, 15, 15, 15}},
    {"5", {0.4, 0.6, 0.6, 0.6, 0.6}, {1, 1, 1, 1}},
    {"6", {0.4, 0.6, 0.6, 0.6, 0.6}, {5, 5, 5, 5}},
    {"7", {0.4, 0.6, 0.6, 0.6, 0.6}, {10, 10, 10, 10}},
    {"8", {0.6, 0.6, 0.4, 0.6, 0.6}, {1, 1, 1, 1}},
    {"9", {0.6, 0.6, 0.4, 0.6, 0.6}, {5, 5, 5, 5}},
    {"10", {0.6, 0.6, 0.4, 0.6, 0.6}, {10, 10, 10, 10}},
    {"11", {0.6, 0.6, 0.6, 0.6, 0.4}, {1, 1, 1, 1}},
    {"12", {0.6, 0.6, 0.6, 0.6, 0.4}, {5, 5, 5, 5}},
    {"13", {0.6, 0.6, 0.6, 0.6, 0.4}, {10, 10, 10, 10}},
    {"14", {0.4, 0.5, 0.6, 0.7, 0.8}, {5, 5, 5, 5}},
    {"15", {0.8, 0.7, 0.6, 0.5, 0.4}, {5, 5, 5, 5}},
    {"16", {0.8, 0.8, 0.8, 0.8, 0.8}, {10, 10, 10, 10}},
    {"17", {0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 4}},
    {"18", {0.4, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 4}},
    {"19", {0.6, 0.6, 0.4, 0.6, 0.6}, {0, 0, 0, 4}},
    {"20", {0.6, 0.6, 0.6, 0.6, 0.4}, {0, 0, 0, 4}},
    {"21", {0.4, 0.5, 0.6, 0.7, 0.8}, {0, 0, 0, 4}},
    {"22", {0.8, 0.7, 0.6, 0.5, 0.4}, {0, 0, 0, 4}},
    {"23", {0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 20}},
    {"24", {0.4, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 20}},
    {"25", {0.6, 0.6, 0.4, 0.6, 0.6}, {0, 0, 0, 20}},
    {"26", {0.6, 0.6, 0.6, 0.6, 0.4}, {0, 0, 0, 20}},
    {"27", {0.4, 0.5, 0.6, 0.7, 0.8}, {0, 0, 0, 20}},
    {"28", {0.8, 0.7, 0.6, 0.5, 0.4}, {0, 0, 0, 20}},
    {"29", {0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 40}},
    {"30", {0.4, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 40}},
    {"31", {0.6, 0.6, 0.4, 0.6, 0.6}, {0, 0, 0, 40}},
    {"32", {0.6, 0.6, 0.6, 0.6, 0.4}, {0, 0, 0, 40}},
    {"33", {0.4, 0.5, 0.6, 0.7, 0.8}, {0, 0, 0, 40}},
    {"34", {0.8, 0.7, 0.6, 0.5, 0.4}, {0, 0, 0, 40}},
};

inline constexpr Reference1Row kReference1[34] = {
    {{1.23163, 1.0987, 0.97433, 0.77488}, 0.38037, {0.03426, 0.02731, 0.01882}},
    {{5.48583, 4.89215, 4.25719, 2.65946}, 0.54193, {0.08878, 0.07539, 0.06011}},
    {{10.82805, 9.68193, 8.42532, 4.95217}, 0.56994, {0.1038, 0.08936, 0.07294}},
    {{16.13622, 14.49405, 12.61259, 7.24265}, 0.57974, {0.10976, 0.09496, 0.07826}},
    {{0.89084, 0.85861, 0.80076, 0.66638}, 0.33398, {0.01941, 0.01716, 0.01263}},
    {{1.20063, 1.20419, 1.2234, 1.17593}, 0.39999, {0.00185, 0.00187, 0.00194}},
    {{1.2, 1.2, 1.20049, 1.19952}, 0.4, {3e-05, 3e-05, 3e-05}},
    {{1.14907, 1.73232, 0.75492, 0.64002}, 0.32303, {0.02261, 0.07934, 0.01077}},
    {{5.01199, 12.40126, 1.21637, 1.17314}, 0.39974, {0.0362, 0.23718, 0.00179}},
    {{10.00018, 27.39982, 1.20048, 1.19952}, 0.4, {0.03622, 0.24, 3e-05}},
    {{1.14272, 1.0509, 0.97693, 1.12223}, 0.31788, {0.02169, 0.01755, 0.01277}},
    {{5.01007, 4.99346, 4.97442, 4.83558}, 0.39836, {0.03579, 0.0353, 0.03476}},
    {{10.00012, 9.9998, 9.99902, 9.80129}, 0.39997, {0.03621, 0.03621, 0.0362}},
    {{2.38749, 1.19888, 0.79971, 0.59974}, 0.39992, {0.02089, 0.00183, 0.00013}},
    {{5.18497, 5.34579, 5.73138, 4.157}, 0.39074, {0.02334, 0.04523, 0.08401}},
    {{10.79251, 9.6596, 8.40536, 4.9827}, 0.77899, {0.07185, 0.06185, 0.05039}},
    {{1.0, 1.00001, 1.00001, 0.99999}, 0.4005, {0.10074, 0.10074, 0.10074}},
    {{0.78465, 0.78465, 0.78464, 0.78464}, 0.34079, {0.07323, 0.07323, 0.07323}},
    {{0.78464, 1.86144, 0.78464, 0.78464}, 0.34079, {0.07323, 0.16477, 0.07323}},
    {{0.78464, 0.78466, 0.78462, 1.86143}, 0.34079, {0.07323, 0.07323, 0.07323}},
    {{1.1603, 0.8039, 0.60786, 0.48619}, 0.34526, {0.11341, 0.07561, 0.0486}},
    {{0.60787, 0.80387, 1.16034, 1.94171}, 0.34525, {0.0486, 0.07561, 0.11341}},
    {{4.19933, 4.20121, 4.19807, 4.20086}, 0.55281, {0.20335, 0.20336, 0.20334}},
    {{1.19992, 1.19972, 1.19983, 1.19983}, 0.39999, {0.10666, 0.10666, 0.10666}},
    {{1.19982, 16.20072, 1.19981, 1.19982}, 0.39999, {0.10666, 0.23999, 0.10666}},
    {{1.19982, 1.19981, 1.1998, 16.20075}, 0.39999, {0.10666, 0.10666, 0.10666}},
    {{2.38737, 1.19895, 0.79964, 0.59981}, 0.39992, {0.15993, 0.10662, 0.06854}},
    {{0.79965, 1.199, 2.38703, 16.01449}, 0.39992, {0.06854, 0.10662, 0.15993}},
    {{8.19695, 8.19684, 8.19331, 8.20839}, 0.57618, {0.22121, 0.22122, 0.22119}},
    {{1.2, 1.2, 1.2, 1.2}, 0.4, {0.10667, 0.10667, 0.10667}},
    {{1.2, 36.2, 1.2, 1.2}, 0.4, {0.10667, 0.24, 0.10667}},
    {{1.2, 1.2, 1.2, 36.2}, 0.4, {0.10667, 0.10667, 0.10667}},
    {{2.4, 1.2, 0.8, 0.6}, 0.4, {0.16, 0.10667, 0.06857}},
    {{0.8, 1.2, 2.39998, 36.00002}, 0.4, {0.06857, 0.10667, 0.16}},
};

inline constexpr Interval kSimNu1[34] = {
    {0.38284, 0.00013},
    {0.5424, 0.00015},
    {0.57007, 0.00012},
    {0.57972, 0.00014},
    {0.33574, 0.00013},
    {0.39998, 0.00023},
    {0.39999, 0.00023},
    {0.32428, 0.00014},
    {0.39971, 0.00024},
    {0.39996, 0.00025},
    {0.31931, 0.00016},
    {0.39821, 0.00028},
    {0.39982, 0.00028},
    {0.39991, 0.00023},
    {0.39054, 0.00025},
    {0.77905, 0.00015},
    {0.4004, 0.00011},
    {0.34061, 0.00013},
    {0.3406, 0.00015},
    {0.34049, 0.00017},
    {0.34518, 0.00011},
    {0.34494, 0.00017},
    {0.55267, 0.00015},
    {0.39998, 0.00023},
    {0.39995, 0.00025},
    {0.39984, 0.00028},
    {0.39991, 0.00023},
    {0.39977, 0.00028},
    {0.57603, 0.00013},
    {0.39999, 0.00023},
    {0.39996, 0.00025},
    {0.39984, 0.00028},
    {0.39999, 0.00023},
    {0.39984, 0.00028},
};

// simulated EB reference row for the first 5-machine configuration
inline constexpr Interval kSimCase1StageWip[4] = {{1.23294, 0.00081}, {1.10032, 0.00074}, {0.97988, 0.00068}, {0.78038, 0.00051}};
inline constexpr Interval kSimCase1Nu = {0.38284, 0.00013};
inline constexpr Interval kSimCase1Overflow[3] = {{0.03443, 0.0001}, {0.02662, 7e-05}, {0.01831, 6e-05}};

// simulated IB references
inline constexpr Interval kSimIbCase1Nu = {0.3774, 0.0001};
inline constexpr Interval kSimIbCase11Nu = {0.3258, 0.0001};
inline constexpr double kSimIbCase1StageWip[4] = {1.2335, 1.0665, 0.9329, 0.7665};

inline constexpr Example2Case kExample2[27] = {
    {"1", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {"2", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"3", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {10, 10, 10, 10, 10, 10, 10, 10, 10}},
    {"4", {0.6, 0.4, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {"5", {0.6, 0.4, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"6", {0.6, 0.4, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {10, 10, 10, 10, 10, 10, 10, 10, 10}},
    {"7", {0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6, 0.6, 0.6, 0.6}, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {"8", {0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6, 0.6, 0.6, 0.6}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"9", {0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6, 0.6, 0.6, 0.6}, {10, 10, 10, 10, 10, 10, 10, 10, 10}},
    {"10", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6}, {1, 1, 1, 1, 1, 1, 1, 1, 1}},
    {"11", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"12", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6}, {10, 10, 10, 10, 10, 10, 10, 10, 10}},
    {"13", {0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"14", {0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4}, {5, 5, 5, 5, 5, 5, 5, 5, 5}},
    {"15", {0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8, 0.8}, {10, 10, 10, 10, 10, 10, 10, 10, 10}},
    {"16", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"17", {0.6, 0.4, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"18", {0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"19", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"20", {0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"21", {0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4}, {0, 0, 0, 0, 0, 0, 0, 0, 9}},
    {"22", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
    {"23", {0.6, 0.4, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
    {"24", {0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6, 0.6, 0.6, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
    {"25", {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.4, 0.6}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
    {"26", {0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
    {"27", {0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4}, {0, 0, 0, 0, 0, 0, 0, 0, 45}},
};

inline constexpr Reference2Row kReference2[27] = {
    {{1.2531, 1.1642, 1.1104, 1.0683, 1.0293, 0.9885, 0.9384, 0.8636, 0.708}, 0.3522, {0.034, 0.0307, 0.0288, 0.0271, 0.0254, 0.0232, 0.0202, 0.0146}},
    {{5.7921, 5.4224, 5.2129, 5.0493, 4.892, 4.7121, 4.4658, 4.0234, 2.5889}, 0.5376, {0.0914, 0.0832, 0.0789, 0.0757, 0.0727, 0.0694, 0.0644, 0.0538}},
    {{11.4298, 10.7553, 10.3609, 10.0515, 9.7541, 9.4113, 8.9265, 8.0223, 4.8469}, 0.5681, {0.1071, 0.0977, 0.093, 0.0896, 0.0865, 0.083, 0.078, 0.0665}},
    {{2.4936, 0.9019, 0.903, 0.8966, 0.8847, 0.866, 0.8364, 0.7828, 0.6544}, 0.3287, {0.1198, 0.0215, 0.0212, 0.0206, 0.0198, 0.0185, 0.0163, 0.0121}},
    {{35.195, 1.2001, 1.1999, 1.2, 1.2002, 1.2008, 1.2044, 1.2236, 1.176}, 0.4, {0.24, 0.0018, 0.0018, 0.0018, 0.0019, 0.0019, 0.0019, 0.0019}},
    {{80.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2005, 1.1995}, 0.4, {0.24, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
    {{1.1874, 1.112, 1.0691, 1.0373, 1.8884, 0.799, 0.7856, 0.7447, 0.63}, 0.3182, {0.026, 0.0235, 0.022, 0.0208, 0.0893, 0.0158, 0.0143, 0.0108}},
    {{5.0137, 5.0012, 5.0001, 5.0, 19.981, 1.2006, 1.2042, 1.2234, 1.1759}, 0.4, {0.0363, 0.036, 0.036, 0.036, 0.2399, 0.0018, 0.0019, 0.0019}},
    {{10.0002, 10.0, 10.0, 10.0, 44.9998, 1.2, 1.2, 1.2005, 1.1995}, 0.4, {0.0362, 0.0362, 0.0362, 0.0362, 0.24, 0.0, 0.0, 0.0}},
    {{1.17, 1.0991, 1.0598, 1.0313, 1.0069, 0.9825, 0.9542, 1.3844, 0.603}, 0.3074, {0.0239, 0.0215, 0.0202, 0.0191, 0.018, 0.0166, 0.0146, 0.0477}},
    {{5.013, 5.001, 4.9999, 4.9995, 4.9988, 4.9971, 4.9924, 8.6573, 1.1525}, 0.3984, {0.0359, 0.0356, 0.0356, 0.0356, 0.0355, 0.0355, 0.0353, 0.2205}},
    {{10.0002, 10.0, 10.0, 10.0, 10.0, 9.9999, 9.9998, 18.6018, 1.1985}, 0.4, {0.0362, 0.0362, 0.0362, 0.0362, 0.0362, 0.0362, 0.0362, 0.2394}},
    {{4.7779, 2.3976, 1.5993, 1.1996, 0.9598, 0.7998, 0.6856, 0.5999, 0.5333}, 0.4, {0.0701, 0.021, 0.0063, 0.0018, 0.0005, 0.0001, 0.0, 0.0}},
    {{5.0594, 5.0753, 5.0986, 5.1344, 5.1929, 5.294, 5.4668, 5.5838, 3.5948}, 0.3792, {0.0085, 0.0133, 0.0193, 0.0272, 0.0373, 0.0504, 0.0679, 0.0882}},
    {{11.3999, 10.7339, 10.3465, 10.0423, 9.7478, 9.4069, 8.9271, 8.0189, 4.8845}, 0.7777, {0.0743, 0.0678, 0.0645, 0.0621, 0.06, 0.0576, 0.0541, 0.0461}},
    {{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 0.3832, {0.0949, 0.0949, 0.0949, 0.0949, 0.0949, 0.0949, 0.0949, 0.0949}},
    {{2.4337, 0.8406, 0.8407, 0.8407, 0.8407, 0.8408, 0.8408, 0.8407, 0.8407}, 0.345, {0.1737, 0.0772, 0.0772, 0.0772, 0.0772, 0.0772, 0.0772, 0.0772}},
    {{0.8407, 0.8407, 0.8407, 0.8407, 2.4338, 0.8405, 0.8408, 0.8407, 0.8407}, 0.345, {0.0772, 0.0772, 0.0772, 0.0772, 0.1737, 0.0772, 0.0772, 0.0772}},
    {{0.8407, 0.8407, 0.8407, 0.8407, 0.8407, 0.8407, 0.8407, 2.4337, 0.8407}, 0.345, {0.0772, 0.0772, 0.0772, 0.0772, 0.0772, 0.0772, 0.0772, 0.1737}},
    {{1.6804, 1.2658, 1.007, 0.8327, 0.7083, 0.6154, 0.5436, 0.4866, 0.4403}, 0.3422, {0.1396, 0.1142, 0.0934, 0.0761, 0.0615, 0.0489, 0.0381, 0.0286}},
    {{0.4866, 0.5437, 0.6154, 0.7083, 0.8327, 1.007, 1.2657, 1.6805, 2.4197}, 0.3422, {0.0286, 0.0381, 0.0489, 0.0615, 0.0761, 0.0934, 0.1142, 0.1396}},
    {{4.6012, 4.6, 4.6001, 4.5994, 4.5989, 4.5982, 4.6011, 4.6007, 4.5988}, 0.5516, {0.2026, 0.2026, 0.2026, 0.2026, 0.2026, 0.2026, 0.2026, 0.2026}},
    {{35.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2}, 0.4, {0.24, 0.1067, 0.1067, 0.1067, 0.1067, 0.1067, 0.1067, 0.1067}},
    {{1.2, 1.2, 1.2, 1.2, 35.2, 1.2, 1.2, 1.2, 1.2}, 0.4, {0.1067, 0.1067, 0.1067, 0.1067, 0.24, 0.1067, 0.1067, 0.1067}},
    {{1.2, 1.2, 1.2, 1.2, 1.2, 1.2, 1.2, 35.2, 1.2}, 0.4, {0.1067, 0.1067, 0.1067, 0.1067, 0.1067, 0.1067, 0.1067, 0.24}},
    {{4.7778, 2.3977, 1.5993, 1.1996, 0.9598, 0.7998, 0.6856, 0.5999, 0.5333}, 0.4, {0.1955, 0.16, 0.1309, 0.1066, 0.0861, 0.0686, 0.0533, 0.04}},
    {{0.5999, 0.6856, 0.7999, 0.9598, 1.1997, 1.5994, 2.3982, 4.775, 32.4492}, 0.4, {0.04, 0.0533, 0.0686, 0.0861, 0.1066, 0.1309, 0.16, 0.1955}},
};

inline LineSpec example1_line(int idx, Policy policy = Policy::EB) {
  const Example1Case& c = kExample1[idx];
  return LineSpec(std::vector<double>(c.p, c.p + 5), std::vector<int>(c.c, c.c + 4), policy);
}

inline LineSpec example2_line(int idx, Policy policy = Policy::EB) {
  const Example2Case& c = kExample2[idx];
  return LineSpec(std::vector<double>(c.p, c.p + 10), std::vector<int>(c.c, c.c + 9), policy);
}

}  // namespace ebline::fixtures
