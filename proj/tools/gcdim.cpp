/*
 * Copyright (c) 2026, the gcdim authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// gcdim: run a session script and print one report per command.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gcdim/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Batch front end for graded homological algebra over F_p"};
  std::string path;
  gcdim::session::RunOptions opts;
  std::string format = "json";
  app.add_option("session", path, "session script, or - for stdin")->required();
  app.add_option("--bound", opts.bound, "Ext/resolution bound")->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--trials", opts.trials, "isomorphism search trials")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  opts.format = format == "text" ? gcdim::session::Format::Text : gcdim::session::Format::Json;

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  gcdim::session::Session s;
  try {
    s = gcdim::session::parse_session(text);
  } catch (const gcdim::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return gcdim::session::run(s, opts, std::cout);
}
