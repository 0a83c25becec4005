#include "respeak/fixtures.hpp"

#include <sstream>

#include "respeak/error.hpp"

namespace respeak {

namespace {

// Human transcription vs original text, 57 speakers.
constexpr std::string_view kTable1 = R"csv(SPKR,BLEU,NIST,TER,METEOR,METEOR-PL,EBLEU,RIBES,NER,RED.
1,56.20,6.90,29.10,79.62,67.07,62.32,85.59,92.38,10.15
2,56.58,6.42,30.96,78.38,67.44,58.82,86.13,94.86,17.77
3,71.56,7.86,18.27,88.28,76.19,79.58,92.48,94.71,12.01
4,76.64,8.27,13.03,90.34,79.29,87.38,93.07,93.1,3.72
5,34.95,5.32,44.50,61.86,47.74,37.06,71.60,91.41,17.03
6,61.73,7.53,20.47,83.10,72.55,69.11,92.43,92.33,4.89
7,61.74,6.93,28.26,78.26,69.78,63.99,78.32,95.3,10.29
8,33.52,4.28,46.02,63.06,47.61,36.75,77.55,93.95,26.81
9,68.97,7.46,22.50,83.15,76.56,71.83,88.78,94.73,4.05
10,70.02,7.80,18.78,86.12,78.71,75.16,88.15,95.23,6.41
11,47.07,5.56,33.84,76.10,62.02,47.86,85.05,93.61,22.77
12,53.49,6.65,30.63,77.93,65.27,55.90,86.20,94.09,14.33
13,75.71,7.95,16.07,89.72,83.13,77.74,91.62,94.78,9.31
14,66.46,7.60,18.44,84.34,76.20,66.53,90.76,94.82,6.09
15,25.77,1.85,54.65,58.62,40.82,31.08,68.90,85.26,32.83
16,88.82,8.66,5.75,96.15,90.12,95.20,95.76,95.96,2.71
17,63.26,7.25,25.72,81.95,73.16,65.83,88.99,94.77,10.15
18,60.69,7.18,26.23,79.41,70.86,66.77,87.56,95.15,5.75
19,59.13,7.2,25.04,80.00,70.32,62.77,89.17,95.78,4.74
20,86.24,8.43,7.11,94.60,90.07,92.88,95.39,95.58,1.52
21,20.61,2.08,65.14,47.56,33.31,27.42,55.63,91.62,36.89
22,64.40,7.43,22.84,82.69,72.82,66.93,89.44,93.46,10.15
23,27.30,2.69,52.62,58.96,43.19,35.78,68.06,90.07,31.81
24,82.43,8.33,10.15,92.40,86.04,85.61,94.63,97.18,12.02
25,82.22,8.44,9.48,93.75,87.00,91.59,95.12,97.01,3.89
26,76.17,8.25,13.54,91.33,81.54,82.35,91.95,95.83,8.63
27,35.01,4.39,49.41,62.64,47.81,46.64,72.79,87.56,25.21
28,29.50,3.53,53.13,60.73,42.98,40.87,74.25,85.76,28.09
29,70.04,7.78,17.26,87.22,80.63,73.58,91.56,93.98,8.63
30,56.75,6.89,26.06,79.60,70.52,58.43,90.78,95.79,11.68
31,63.18,6.90,26.57,83.47,71.80,67.80,84.51,94.29,17.77
32,31.74,5.14,43.15,63.58,49.37,33.07,83.05,94.77,19.12
33,89.09,8.54,5.41,95.69,91.62,92.62,95.94,97.41,0.34
34,81.04,8.42,8.29,93.60,88.51,89.68,95.18,93.76,5.75
35,73.72,8.11,15.40,88.62,78.32,83.17,92.48,93.89,4.40
36,69.73,7.90,15.06,87.90,81.65,78.10,93.91,93.97,7.45
37,57.00,7.24,26.40,81.28,68.54,65.83,86.63,92.74,8.46
38,35.26,3.68,46.70,66.04,47.84,40.73,74.61,89.15,27.07
39,46.76,4.92,39.59,72.95,57.66,54.28,72.77,88.07,25.21
40,16.79,1.74,65.48,44.61,29.04,19.62,58.77,86.68,32.66
41,19.68,0.63,61.42,56.13,39.15,41.59,49.67,84.36,52.12
42,39.19,5.04,41.62,68.38,50.85,42.41,79.79,91.23,23.35
43,67.13,7.61,19.12,86.53,75.63,68.60,93.51,95.01,11.84
44,49.85,6.26,33.84,75.31,64.34,59.44,79.28,92.23,11.84
45,37.38,4.2,43.49,68.66,54.30,44.51,75.36,93.11,27.58
46,79.11,8.25,12.01,91.48,85.72,81.66,94.84,95.36,6.09
47,40.73,4.93,41.96,68.61,54.34,42.96,83.09,89.97,21.15
48,29.03,2.65,51.27,61.24,47.21,39.53,67.21,86.07,31.98
49,68.75,7.78,18.78,86.24,77.18,72.40,90.65,94.95,5.41
50,75.24,7.97,16.07,88.88,81.51,81.27,90.88,95.75,7.45
51,78.71,8.24,11.51,91.33,83.99,86.08,94.77,98.69,4.23
52,37.60,4.31,44.84,66.32,51.59,42.22,78.73,89.37,-6.6
53,73.20,8.07,14.38,88.78,79.55,77.39,93.93,93.73,2.2
54,67.43,7.67,20.30,85.64,75.90,70.28,87.57,94.91,12.07
55,70.06,7.90,18.44,87.29,76.67,78.93,90.79,93.49,7.11
56,71.88,7.83,17.77,88.24,78.07,77.51,89.21,97.74,8.46
57,80.05,8.3,11.00,91.81,85.72,83.94,95.03,96.12,2.88
)csv";

// ASR output vs original text, 20 speakers.
constexpr std::string_view kTable2 = R"csv(SPKR,BLEU,NIST,TER,METEOR,METEOR-PL,EBLEU,RIBES,NER,RED.
1,41.89,6.05,44.33,66.10,54.05,44.77,78.94,92.38,10.15
2,48.94,5.94,37.39,71.14,60.24,49.79,81.29,94.86,17.77
3,57.38,7.11,27.24,78.41,67.08,62.87,89.42,94.71,12.01
4,59.15,7.07,27.24,77.21,67.94,65.31,87.71,93.1,3.72
5,26.08,4.57,55.33,52.33,39.14,26.89,69.22,91.41,17.03
6,44.17,6.32,36.38,69.16,60.15,47.97,86.04,92.33,4.89
7,51.79,6.39,34.86,71.42,65.47,52.31,79.19,95.3,10.29
8,22.03,3.17,61.93,45.27,33.90,22.14,59.93,93.95,26.81
9,52.35,6.09,39.93,68.02,63.07,53.87,78.53,94.73,4.05
10,54.44,6.65,33.50,73.16,65.42,57.28,82.11,95.23,6.41
11,65.95,7.57,19.63,84.68,76.30,72.76,92.45,97.01,3.89
12,59.12,7.26,24.53,81.63,69.57,61.59,89.13,95.83,8.63
13,17.08,2.96,68.19,42.14,30.55,21.97,59.69,85.76,28.09
14,49.78,6.53,32.32,72.88,64.10,51.98,86.56,93.98,8.63
15,46.01,6.3,34.69,71.10,61.70,46.11,87.96,95.79,11.68
16,35.50,5.03,44.33,65.64,50.58,36.53,79.16,93.61,22.77
17,34.42,4.51,56.01,52.80,41.15,34.17,63.30,94.09,14.33
18,58.58,6.95,28.93,77.96,69.47,59.22,85.73,94.78,9.31
19,49.06,6.50,31.64,72.94,63.35,47.49,85.64,94.82,6.09
20,19.86,2.58,65.48,46.48,31.29,21.38,60.96,85.26,32.83
)csv";

}  // namespace

std::string_view fixture_csv(std::string_view name) {
  if (name == "table1") return kTable1;
  if (name == "table2") return kTable2;
  throw Error(ErrorCode::InvalidInput, "unknown fixture '" + std::string(name) + "'");
}

DataTable fixture_table(std::string_view name, const std::string& response) {
  std::istringstream in{std::string(fixture_csv(name))};
  return parse_data_table(in, response);
}

}  // namespace respeak
