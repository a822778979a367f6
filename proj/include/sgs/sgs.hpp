#pragma once

#include "sgs/cert_forest.hpp"
#include "sgs/cert_kconn.hpp"
#include "sgs/cert_msf.hpp"
#include "sgs/certificate.hpp"
#include "sgs/errors.hpp"
#include "sgs/generate.hpp"
#include "sgs/graph.hpp"
#include "sgs/io.hpp"
#include "sgs/oracle.hpp"
#include "sgs/run.hpp"
#include "sgs/stream.hpp"
#include "sgs/verdict.hpp"
#include "sgs/work.hpp"
