#pragma once

#include "swanson/closed_forms.hpp"
#include "swanson/fock_matrix.hpp"
#include "swanson/fock_ops.hpp"
#include "swanson/hermitian_eigen.hpp"
#include "swanson/matrix_exp.hpp"
#include "swanson/operator_factory.hpp"
#include "swanson/verification.hpp"
