#ifndef AOP_AOP_HPP
#define AOP_AOP_HPP

#include "aop/acyclicity.hpp"
#include "aop/decide.hpp"
#include "aop/enumerate.hpp"
#include "aop/formula.hpp"
#include "aop/gadgets.hpp"
#include "aop/graph.hpp"
#include "aop/io.hpp"
#include "aop/planar.hpp"
#include "aop/reduction.hpp"
#include "aop/rotation.hpp"
#include "aop/search.hpp"
#include "aop/solve_result.hpp"
#include "aop/special.hpp"
#include "aop/transforms.hpp"

#endif  // AOP_AOP_HPP
