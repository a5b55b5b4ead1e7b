//   Copyright 2026 The Eclipse Query Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef ECLIPSE_SERVICE_LOG_HPP
#define ECLIPSE_SERVICE_LOG_HPP

namespace eclipse::service {

/// Routes logging to stderr at the level named by ECLIPSE_LOG
/// (error, info or debug; default info). Unknown values fall back to info.
void init_logging();

} // namespace eclipse::service

#endif // ECLIPSE_SERVICE_LOG_HPP
