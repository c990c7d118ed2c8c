/*
   Copyright 2026 The Cyclonomy Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "cyclonomy/bigint.hpp"
#include "cyclonomy/class_number.hpp"
#include "cyclonomy/cyclo.hpp"
#include "cyclonomy/descent.hpp"
#include "cyclonomy/element_io.hpp"
#include "cyclonomy/error.hpp"
#include "cyclonomy/field_context.hpp"
#include "cyclonomy/hilbert90.hpp"
#include "cyclonomy/hnf.hpp"
#include "cyclonomy/ideal.hpp"
#include "cyclonomy/regularity.hpp"
#include "cyclonomy/units.hpp"
