#ifndef BITRANS_BITRANS_HPP
#define BITRANS_BITRANS_HPP

#include <bitrans/cli.hpp>
#include <bitrans/formio.hpp>
#include <bitrans/forms.hpp>
#include <bitrans/matrix.hpp>
#include <bitrans/rational.hpp>
#include <bitrans/schedule.hpp>
#include <bitrans/transvectant.hpp>
#include <bitrans/verifier.hpp>
#include <bitrans/witness.hpp>

#endif
