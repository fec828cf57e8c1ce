#ifndef SOLGROWTH_SOLGROWTH_HPP_
#define SOLGROWTH_SOLGROWTH_HPP_

#include "solgrowth/error.hpp"
#include "solgrowth/element.hpp"
#include "solgrowth/table.hpp"
#include "solgrowth/subgroup.hpp"
#include "solgrowth/constructions.hpp"
#include "solgrowth/catalog.hpp"
#include "solgrowth/spec_io.hpp"
#include "solgrowth/soluble.hpp"
#include "solgrowth/mu_value.hpp"
#include "solgrowth/mu.hpp"
#include "solgrowth/bounds.hpp"
#include "solgrowth/linear.hpp"
#include "solgrowth/small_cases.hpp"
#include "solgrowth/growth.hpp"
#include "solgrowth/milnor.hpp"
#include "solgrowth/certificate.hpp"

#endif  // SOLGROWTH_SOLGROWTH_HPP_
