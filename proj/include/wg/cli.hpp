#pragma once

namespace wg {

int cli_main(int argc, char** argv);

} // namespace wg
