#include "qcss/golden.hpp"

namespace qcss::golden {

namespace {

constexpr std::string_view k_q16_interleaved = R"GOLD(QMAT1
order 30
flock 3
length 5
members 15
declared_theta 4.000000
meta kind prop1-interleaved
meta p 2
meta n 4
meta q 16

0 15 15 15 15
0 0 15 0 15
0 0 0 15 15

0 21 27 3 9
2 8 29 20 11
4 10 16 7 13

0 27 9 21 3
4 16 13 10 7
8 20 2 29 11

0 3 21 9 27
6 24 27 0 3
12 0 18 21 9

0 9 3 27 21
8 2 11 20 29
16 10 4 13 7

0 15 15 15 15
10 10 25 10 25
20 20 20 5 5

0 21 27 3 9
12 18 9 0 21
24 0 6 27 3

0 27 9 21 3
14 26 23 20 17
28 10 22 19 1

0 3 21 9 27
16 4 7 10 13
2 20 8 11 29

0 9 3 27 21
18 12 21 0 9
6 0 24 3 27

0 15 15 15 15
20 20 5 20 5
10 10 10 25 25

0 21 27 3 9
22 28 19 10 1
14 20 26 17 23

0 27 9 21 3
24 6 3 0 27
18 0 12 9 21

0 3 21 9 27
26 14 17 20 23
22 10 28 1 19

0 9 3 27 21
28 22 1 10 19
26 20 14 23 17
)GOLD";

constexpr std::string_view k_thm41_n9 = R"GOLD(QMAT1
order 9
flock 9
length 9
members 18
declared_theta 9.000000
meta kind thm41
meta rho identity

0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1

0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2

0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0

0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1

0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8

0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0

0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7

0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8

0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6

0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7

0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5

0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6

0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4

0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5

0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3

0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4

0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2

0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
)GOLD";

constexpr std::string_view k_thm42_n9 = R"GOLD(QMAT1
order 9
flock 8
length 9
members 18
declared_theta 9.000000
meta kind thm42
meta rho identity

0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1

0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2

0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0

0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1

0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8

0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0

0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7

0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8

0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6

0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7

0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5

0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6

0 7 5 3 1 8 6 4 2
0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4

0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5

0 8 7 6 5 4 3 2 1
0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3

0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
0 8 7 6 5 4 3 2 1
0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4

0 0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7 8
0 2 4 6 8 1 3 5 7
0 3 6 0 3 6 0 3 6
0 4 8 3 7 2 6 1 5
0 5 1 6 2 7 3 8 4
0 6 3 0 6 3 0 6 3
0 7 5 3 1 8 6 4 2

0 1 2 3 4 5 6 7 8
0 3 6 0 3 6 0 3 6
0 5 1 6 2 7 3 8 4
0 7 5 3 1 8 6 4 2
0 0 0 0 0 0 0 0 0
0 2 4 6 8 1 3 5 7
0 4 8 3 7 2 6 1 5
0 6 3 0 6 3 0 6 3
)GOLD";

}  // namespace

const std::vector<Entry>& corpus() {
    static const std::vector<Entry> entries = {
        {"q16_k3_interleaved.qmat", k_q16_interleaved},
        {"thm41_n9.qmat", k_thm41_n9},
        {"thm42_n9.qmat", k_thm42_n9},
    };
    return entries;
}

std::string_view q16_interleaved() { return k_q16_interleaved; }
std::string_view thm41_n9() { return k_thm41_n9; }
std::string_view thm42_n9() { return k_thm42_n9; }

}  // namespace qcss::golden
