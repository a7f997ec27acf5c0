#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>

// Path of the command-line binary under test, handed to the runner as the
// single positional argument (see braidq_cli_tests in CMakeLists.txt).
std::string g_cli_path;

int main(int argc, char** argv) {
  doctest::Context ctx;
  int keep = 1;
  std::vector<char*> args{argv[0]};
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("-", 0) == 0) {
      args.push_back(argv[i]);
      ++keep;
    } else {
      g_cli_path = a;
    }
  }
  ctx.applyCommandLine(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
