#include "levi/table2.hpp"

namespace levi {

// Entry-by-entry transcription of the printed multiplication table, kept as
// printed. Basis order v0..v10, w0..w18, z0..z6, x0..x14. Not corrected here:
// the verifier flags what is inconsistent and repair_equivariant proposes a fix.
std::string_view table2_source() {
  static const char* const text = R"(lieconst 1
dim 52
name nqc52
c 1 2 12 1
c 1 3 13 1/2
c 1 4 14 4/17
c 1 4 38 1
c 1 5 15 7/68
c 1 5 39 1/2
c 1 6 16 7/170
c 1 6 40 3/13
c 1 7 17 1/68
c 1 7 41 5/52
c 1 8 18 1/221
c 1 8 31 1
c 1 8 42 5/143
c 1 9 19 1/884
c 1 9 32 1/2
c 1 9 43 3/286
c 1 10 20 1/4862
c 1 10 33 1/5
c 1 10 44 1/429
c 1 11 21 1/48620
c 1 11 34 1/20
c 1 11 45 1/3432
c 1 19 38 1
c 1 20 39 11/14
c 1 21 40 55/91
c 1 22 41 165/364
c 1 23 42 30/91
c 1 24 43 3/13
c 1 25 44 2/13
c 1 26 45 5/52
c 1 27 46 5/91
c 1 28 47 5/182
c 1 29 48 1/91
c 1 30 49 1/364
c 1 32 38 -209/442
c 1 33 39 -1045/6188
c 1 34 40 -1045/20111
c 1 35 41 -1045/80444
c 1 36 42 -95/40222
c 1 37 43 -19/80444
c 2 3 14 5/17
c 2 3 38 -3
c 2 4 15 5/17
c 2 4 39 -1
c 2 5 16 7/34
c 2 5 40 -2/13
c 2 6 17 2/17
c 2 6 41 3/26
c 2 7 18 25/442
c 2 7 31 -7
c 2 7 42 20/143
c 2 8 19 5/221
c 2 8 32 -3
c 2 8 43 1/11
c 2 9 20 35/4862
c 2 9 33 -4/5
c 2 9 44 6/143
c 2 10 21 4/2431
c 2 10 34 1/10
c 2 10 45 23/1716
c 2 11 22 1/4862
c 2 11 35 1/5
c 2 11 46 1/429
c 2 18 38 -7
c 2 19 39 -37/7
c 2 20 40 -352/91
c 2 21 41 -495/182
c 2 22 42 -165/91
c 2 23 43 -102/91
c 2 24 44 -8/13
c 2 25 45 -7/26
c 2 26 46 -5/91
c 2 27 47 5/91
c 2 28 48 8/91
c 2 29 49 1/14
c 2 30 50 3/91
c 2 31 38 209/442
c 2 32 39 -209/1547
c 2 33 40 -1045/5746
c 2 34 41 -2090/20111
c 2 35 42 -95/2366
c 2 36 43 -209/20111
c 2 37 44 -57/40222
c 3 4 16 3/17
c 3 4 40 -9/13
c 3 5 17 15/68
c 3 5 41 -27/52
c 3 6 18 81/442
c 3 6 31 21
c 3 6 42 -27/143
c 3 7 19 105/884
c 3 7 32 7
c 3 7 43 9/286
c 3 8 20 150/2431
c 3 8 33 1/5
c 3 8 44 15/143
c 3 9 21 243/9724
c 3 9 34 -33/20
c 3 9 45 9/104
c 3 10 22 35/4862
c 3 10 35 -4/5
c 3 10 46 6/143
c 3 11 23 1/884
c 3 11 36 1/2
c 3 11 47 3/286
c 3 17 38 21
c 3 18 39 15
c 3 19 40 927/91
c 3 20 41 2343/364
c 3 21 42 330/91
c 3 22 43 297/182
c 3 23 44 30/91
c 3 24 45 -21/52
c 3 25 46 -9/13
c 3 26 47 -60/91
c 3 27 48 -3/7
c 3 28 49 -45/364
c 3 29 50 12/91
c 3 30 51 3/14
c 3 31 39 1881/6188
c 3 32 40 1881/40222
c 3 33 41 -9405/80444
c 3 34 42 -2565/20111
c 3 35 43 -855/11492
c 3 36 44 -1083/40222
c 3 37 45 -57/11492
c 4 5 18 30/221
c 4 5 31 -35
c 4 5 42 -54/143
c 4 6 19 42/221
c 4 6 32 -7
c 4 6 43 -54/143
c 4 7 20 420/2431
c 4 7 33 21/5
c 4 7 44 -2/11
c 4 8 21 288/2431
c 4 8 34 23/5
c 4 8 45 2/143
c 4 9 22 150/2431
c 4 9 35 1/5
c 4 9 46 15/143
c 4 10 23 5/221
c 4 10 36 -3
c 4 10 47 1/11
c 4 11 24 1/221
c 4 11 37 1
c 4 11 48 5/143
c 4 16 38 -35
c 4 17 39 -23
c 4 18 40 -179/13
c 4 19 41 -635/91
c 4 20 42 -209/91
c 4 21 43 55/91
c 4 22 44 187/91
c 4 23 45 31/13
c 4 24 46 25/13
c 4 25 47 1
c 4 26 48 -5/91
c 4 27 49 -83/91
c 4 28 50 -113/91
c 4 29 51 -5/7
c 4 30 52 1
c 4 31 40 3762/20111
c 4 32 41 2508/20111
c 4 33 42 -570/20111
c 4 34 43 -2280/20111
c 4 35 44 -2090/20111
c 4 36 45 -152/2873
c 4 37 46 -38/2873
c 5 6 20 294/2431
c 5 6 33 -49/5
c 5 6 44 -42/143
c 5 7 21 441/2431
c 5 7 34 -49/10
c 5 7 45 -49/143
c 5 8 22 420/2431
c 5 8 35 21/5
c 5 8 46 -2/11
c 5 9 23 105/884
c 5 9 36 7
c 5 9 47 9/286
c 5 10 24 25/442
c 5 10 37 -7
c 5 10 48 20/143
c 5 11 25 1/68
c 5 11 49 5/52
c 5 15 38 35
c 5 16 39 20
c 5 17 40 119/13
c 5 18 41 49/26
c 5 19 42 -31/13
c 5 20 43 -55/13
c 5 21 44 -55/13
c 5 22 45 -77/26
c 5 23 46 -1
c 5 24 47 14/13
c 5 25 48 35/13
c 5 26 49 85/26
c 5 27 50 29/13
c 5 28 51 -1
c 5 29 52 -7
c 5 31 41 627/5746
c 5 32 42 399/2873
c 5 33 43 285/5746
c 5 34 44 -190/2873
c 5 35 45 -665/5746
c 5 36 46 -19/221
c 5 37 47 -171/5746
c 6 7 22 294/2431
c 6 7 35 -49/5
c 6 7 46 -42/143
c 6 8 23 42/221
c 6 8 36 -7
c 6 8 47 -54/143
c 6 9 24 81/442
c 6 9 37 21
c 6 9 48 -27/143
c 6 10 25 2/17
c 6 10 49 3/26
c 6 11 26 7/170
c 6 11 50 3/13
c 6 14 38 -21
c 6 15 39 -9
c 6 16 40 -15/13
c 6 17 41 42/13
c 6 18 42 63/13
c 6 19 43 57/13
c 6 20 44 33/13
c 6 22 46 -3/13
c 6 23 47 -57/13
c 6 24 48 -63/13
c 6 25 49 -42/13
c 6 26 50 15/13
c 6 27 51 9
c 6 28 52 21
c 6 31 42 171/2873
c 6 32 43 342/2873
c 6 33 44 285/2873
c 6 35 46 -285/2873
c 6 36 47 -342/2873
c 6 37 48 -171/2873
c 7 8 24 30/221
c 7 8 37 -35
c 7 8 48 -54/143
c 7 9 25 15/68
c 7 9 49 -27/52
c 7 10 26 7/34
c 7 10 50 -2/13
c 7 11 27 7/68
c 7 11 51 1/2
c 7 13 38 7
c 7 14 39 1
c 7 15 40 -29/13
c 7 16 41 -85/26
c 7 17 42 -35/13
c 7 18 43 -14/13
c 7 19 44 1
c 7 20 45 77/26
c 7 21 46 55/13
c 7 22 47 55/13
c 7 23 48 31/13
c 7 24 49 -49/26
c 7 25 50 -119/13
c 7 26 51 -20
c 7 27 52 -35
c 7 31 43 171/5746
c 7 32 44 19/221
c 7 33 45 665/5746
c 7 34 46 190/2873
c 7 35 47 -285/5746
c 7 36 48 -399/2873
c 7 37 49 -627/5746
c 8 9 26 3/17
c 8 9 50 -9/13
c 8 10 27 5/17
c 8 10 51 -1
c 8 11 28 4/17
c 8 11 52 1
c 8 12 38 -1
c 8 13 39 5/7
c 8 14 40 113/91
c 8 15 41 83/91
c 8 16 42 5/91
c 8 17 43 -1
c 8 18 44 -25/13
c 8 19 45 -31/13
c 8 20 46 -187/91
c 8 21 47 -55/91
c 8 22 48 209/91
c 8 23 49 635/91
c 8 24 50 179/13
c 8 25 51 23
c 8 26 52 35
c 8 31 44 38/2873
c 8 32 45 152/2873
c 8 33 46 2090/20111
c 8 34 47 2280/20111
c 8 35 48 570/20111
c 8 36 49 -2508/20111
c 8 37 50 -3762/20111
c 9 10 28 5/17
c 9 10 52 -3
c 9 11 29 1/2
c 9 12 39 -3/14
c 9 13 40 -12/91
c 9 14 41 45/364
c 9 15 42 3/7
c 9 16 43 60/91
c 9 17 44 9/13
c 9 18 45 21/52
c 9 19 46 -30/91
c 9 20 47 -297/182
c 9 21 48 -330/91
c 9 22 49 -2343/364
c 9 23 50 -927/91
c 9 24 51 -15
c 9 25 52 -21
c 9 31 45 57/11492
c 9 32 46 1083/40222
c 9 33 47 855/11492
c 9 34 48 2565/20111
c 9 35 49 9405/80444
c 9 36 50 -1881/40222
c 9 37 51 -1881/6188
c 10 11 30 1
c 10 12 40 -3/91
c 10 13 41 -1/14
c 10 14 42 -8/91
c 10 15 43 -5/91
c 10 16 44 5/91
c 10 17 45 7/26
c 10 18 46 8/13
c 10 19 47 102/91
c 10 20 48 165/91
c 10 21 49 495/182
c 10 22 50 352/91
c 10 23 51 37/7
c 10 24 52 7
c 10 31 46 57/40222
c 10 32 47 209/20111
c 10 33 48 95/2366
c 10 34 49 2090/20111
c 10 35 50 1045/5746
c 10 36 51 209/1547
c 10 37 52 -209/442
c 11 12 41 -1/364
c 11 13 42 -1/91
c 11 14 43 -5/182
c 11 15 44 -5/91
c 11 16 45 -5/52
c 11 17 46 -2/13
c 11 18 47 -3/13
c 11 19 48 -30/91
c 11 20 49 -165/364
c 11 21 50 -55/91
c 11 22 51 -11/14
c 11 23 52 -1
c 11 31 47 19/80444
c 11 32 48 95/40222
c 11 33 49 1045/80444
c 11 34 50 1045/20111
c 11 35 51 1045/6188
c 11 36 52 209/442
)";
  return text;
}

}  // namespace levi
