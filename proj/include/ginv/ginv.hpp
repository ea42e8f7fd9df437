#pragma once

#include "ginv/classgroup.hpp"
#include "ginv/error.hpp"
#include "ginv/field.hpp"
#include "ginv/form.hpp"
#include "ginv/invariant.hpp"
#include "ginv/oracle.hpp"
#include "ginv/repset.hpp"
#include "ginv/verify.hpp"
