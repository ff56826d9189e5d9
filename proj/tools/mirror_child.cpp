// Small child process speaking the IN/OUT line protocol, used to exercise
// external system connections.
//
//   mirror_child echo      OUT v for every IN v
//   mirror_child double    OUT v and OUT 2v for every IN v
//   mirror_child silent    reads inputs, never answers
//   mirror_child garbage   answers with a malformed line
//   mirror_child exit      exits after the first input

#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    const std::string mode = argc > 1 ? argv[1] : "echo";
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.rfind("IN ", 0) != 0) {
            std::cerr << "unexpected line: " << line << '\n';
            return 1;
        }
        const std::string value = line.substr(3);
        if (mode == "echo") {
            std::cout << "OUT " << value << std::endl;
        } else if (mode == "double") {
            std::cout << "OUT " << value << '\n' << "OUT " << std::stod(value) * 2 << std::endl;
        } else if (mode == "garbage") {
            std::cout << "hello " << value << std::endl;
        } else if (mode == "exit") {
            return 0;
        }
    }
    return 0;
}
