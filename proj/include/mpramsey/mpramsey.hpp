#pragma once

#include "mpramsey/errors.hpp"
#include "mpramsey/graph.hpp"
#include "mpramsey/witness.hpp"
#include "mpramsey/matching.hpp"
#include "mpramsey/search.hpp"
#include "mpramsey/finders.hpp"
#include "mpramsey/certificates.hpp"
#include "mpramsey/constructions.hpp"
#include "mpramsey/hamiltonicity.hpp"
#include "mpramsey/frontier.hpp"
#include "mpramsey/io.hpp"
