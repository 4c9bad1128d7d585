#pragma once

#include <array>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mackeylab/finlab/field.hpp"

namespace mlab::finlab {

using Mat = std::array<uint8_t, 9>;  // n x n row major over F_q, n <= 3

Mat mat_identity(int n);
Mat mat_mul(const FqField& F, int n, const Mat& a, const Mat& b);
uint8_t mat_det(const FqField& F, int n, const Mat& a);
Mat mat_inverse(const FqField& F, int n, const Mat& a);  // via adjugate, det must be 1

// A concrete finite matrix group with fully enumerated elements, products by
// table-driven matrix multiplication, and conjugacy class data.
class MatrixGroup {
public:
    static MatrixGroup special_linear(int n, int q, bool enable_big_q = false);
    static MatrixGroup from_predicate(int n, int q, const std::function<bool(const Mat&)>& pred,
                                      std::string name);
    static MatrixGroup from_generators(int n, int q, const std::vector<Mat>& gens,
                                       std::string name);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const FqField& field() const { return *F_; }
    long long order() const { return static_cast<long long>(elems_.size()); }

    int id_of(const Mat& m) const;  // -1 when not a member
    const Mat& mat(int id) const { return elems_[id]; }
    bool contains(const Mat& m) const { return id_of(m) >= 0; }
    int identity_id() const { return identity_; }
    int mult(int a, int b) const;
    int inverse(int a) const { return inv_[a]; }

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int id) const { return class_of_[id]; }
    int class_rep(int c) const { return class_reps_[c]; }
    long long class_size(int c) const { return class_sizes_[c]; }
    int inverse_class(int c) const { return class_of_[inv_[class_reps_[c]]]; }
    int power_class(int c, long long t) const;

    long long element_order(int id) const;
    long long class_order(int c) const { return element_order(class_reps_[c]); }
    long long exponent() const;

    bool is_unipotent(int id) const;  // (g - 1)^n = 0
    int semisimple_part(int id) const;

    std::vector<int> elements_matching(const std::function<bool(const Mat&)>& pred) const;
    const std::vector<int>& generators() const { return gens_; }

private:
    MatrixGroup(int n, int q, std::string name);
    void finalize(std::vector<Mat> elems);
    void compute_classes();

    int n_, q_;
    std::string name_;
    const FqField* F_;
    std::vector<Mat> elems_;
    std::vector<int32_t> code_to_id_;  // direct address by base-q code
    std::vector<int32_t> inv_;
    std::vector<int32_t> class_of_;
    std::vector<int32_t> class_reps_;
    std::vector<long long> class_sizes_;
    std::vector<int> gens_;
    int identity_ = -1;
};

// Enumeration guard limits for the special linear families.
void check_sl_guard(int n, int q, bool enable_big_q);

}  // namespace mlab::finlab
