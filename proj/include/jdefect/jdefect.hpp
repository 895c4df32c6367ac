#pragma once

#include <jdefect/fields.hpp>
#include <jdefect/linalg.hpp>
#include <jdefect/forms.hpp>
#include <jdefect/jacobian.hpp>
#include <jdefect/singularities.hpp>
#include <jdefect/families.hpp>
#include <jdefect/report.hpp>
#include <jdefect/verification.hpp>
