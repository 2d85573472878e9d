/* Copyright 2026 The nlcov Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Expected oracle traces of the five-word example tree, written out by hand
// row by row, and the same tree as a CoNLL-X document.

#pragma once

namespace nlcov::testing {

inline constexpr const char *kExampleConllx =
    "1\tw1\t_\tX\tX\t_\t0\tROOT\t_\t_\n"
    "2\tw2\t_\tX\tX\t_\t1\t_\t_\t_\n"
    "3\tw3\t_\tX\tX\t_\t1\t_\t_\t_\n"
    "4\tw4\t_\tX\tX\t_\t5\t_\t_\t_\n"
    "5\tw5\t_\tX\tX\t_\t1\t_\t_\t_\n";

inline constexpr const char *kCovingtonGoldenTrace =
    "step\ttransition\tlambda1\tlambda2\tbuffer\tnew_arc\n"
    "1\tSH\t[1]\t[]\t[2, 3, 4, 5]\t\n"
    "2\tRA\t[]\t[1]\t[2, 3, 4, 5]\t1->2\n"
    "3\tSH\t[1, 2]\t[]\t[3, 4, 5]\t\n"
    "4\tNA\t[1]\t[2]\t[3, 4, 5]\t\n"
    "5\tRA\t[]\t[1, 2]\t[3, 4, 5]\t1->3\n"
    "6\tSH\t[1, 2, 3]\t[]\t[4, 5]\t\n"
    "7\tSH\t[1, 2, 3, 4]\t[]\t[5]\t\n"
    "8\tLA\t[1, 2, 3]\t[4]\t[5]\t4<-5\n"
    "9\tNA\t[1, 2]\t[3, 4]\t[5]\t\n"
    "10\tNA\t[1]\t[2, 3, 4]\t[5]\t\n"
    "11\tRA\t[]\t[1, 2, 3, 4]\t[5]\t1->5\n"
    "12\tSH\t[1, 2, 3, 4, 5]\t[]\t[]\t\n";

inline constexpr const char *kNlCovingtonGoldenTrace =
    "step\ttransition\tlambda1\tlambda2\tbuffer\tnew_arc\n"
    "1\tSH\t[1]\t[]\t[2, 3, 4, 5]\t\n"
    "2\tRA(1)\t[]\t[1]\t[2, 3, 4, 5]\t1->2\n"
    "3\tSH\t[1, 2]\t[]\t[3, 4, 5]\t\n"
    "4\tRA(2)\t[]\t[1, 2]\t[3, 4, 5]\t1->3\n"
    "5\tSH\t[1, 2, 3]\t[]\t[4, 5]\t\n"
    "6\tSH\t[1, 2, 3, 4]\t[]\t[5]\t\n"
    "7\tLA(1)\t[1, 2, 3]\t[4]\t[5]\t4<-5\n"
    "8\tRA(3)\t[]\t[1, 2, 3, 4]\t[5]\t1->5\n"
    "9\tSH\t[1, 2, 3, 4, 5]\t[]\t[]\t\n";

}  // namespace nlcov::testing
