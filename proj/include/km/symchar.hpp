#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace km {

// Partition of n in weakly decreasing order; indexes both conjugacy classes
// (as cycle types) and irreducible representations (as Young diagrams).
struct Partition {
    std::vector<int> parts;

    int n() const;
    // i_k = number of parts equal to k, indexed 1..n.
    std::vector<int> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string partition_name(const Partition& p);  // "[3,2,1]"

// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions(int n);

// n! / prod_k k^{i_k} i_k!
mpz_class class_size(const Partition& cycle_type);

mpz_class factorial(int n);

// Number of k-subsets of [n] fixed setwise by a permutation of the given
// cycle type: sub-collections of whole cycles with lengths summing to k.
mpz_class chi_subsets(const Partition& cycle_type, int k);

enum class IrrepLabel { row_n, row_n1_1, row_n2_2, row_n3_3 };

std::string irrep_label_name(IrrepLabel label, int n);  // "[n-2,2]" style: "[4,2]"

// Closed-form characters of the four irreducibles [n], [n-1,1], [n-2,2],
// [n-3,3] evaluated on a cycle type.
mpz_class chi_irrep(IrrepLabel label, const Partition& cycle_type, int n);

// Murnaghan-Nakayama evaluation of the irreducible character of `diagram` on
// `cycle_type`; independent oracle for chi_irrep.
mpz_class chi_mn(const Partition& diagram, const Partition& cycle_type);

// Class function: one integer per partition of n, in partitions(n) order.
struct ClassFunction {
    int n = 0;
    std::vector<mpz_class> values;

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction class_function_subsets(int n, int k);                // chi_k
ClassFunction class_function_irrep(IrrepLabel label, int n);       // closed form
ClassFunction class_function_mn(const Partition& diagram, int n);  // MN oracle

// (1/n!) sum_lambda |C_lambda| f(lambda) g(lambda), exact.
mpq_class inner_product(const ClassFunction& f, const ClassFunction& g);

// n! / product of hook lengths.
mpz_class hook_dim(const Partition& diagram);

}  // namespace km
